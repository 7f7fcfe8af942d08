"""Matched pairs of finite groups and the calculus of squares.

A matched pair is stored as two tables indexed ``[g, x]`` (``g`` in G,
``x`` in F):

* ``act_l[g, x] = g ◁ x``  (right action of F on the set G, a G-index)
* ``act_r[g, x] = g ▷ x``  (left action of G on the set F, an F-index)

A *square* is a quadruple (top g, left v, right x, bottom t) with
``g x = v t`` in the ambient group, i.e. ``v = g ▷ x`` and ``t = g ◁ x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

import numpy as np

from .errors import (
    Comp1Fails,
    Comp2Fails,
    NotComposable,
    NotExactFactorization,
    NotLeftAction,
    NotRightAction,
)
from .groups import FiniteGroup, check_subgroup, make_group, subgroup
from .report import Report, sweep


@dataclass(frozen=True, eq=False)
class MatchedPair:
    F: FiniteGroup
    G: FiniteGroup
    act_l: np.ndarray
    act_r: np.ndarray

    def __post_init__(self) -> None:
        shape = (self.G.order, self.F.order)
        for name in ("act_l", "act_r"):
            arr = np.array(getattr(self, name), dtype=np.int64)
            if arr.shape != shape:
                raise ValueError(f"{name} must have shape {shape}, got {arr.shape}")
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.act_l.min() < 0 or self.act_l.max() >= self.G.order:
            raise ValueError("act_l entries must be G indices")
        if self.act_r.min() < 0 or self.act_r.max() >= self.F.order:
            raise ValueError("act_r entries must be F indices")

    @property
    def nF(self) -> int:
        return self.F.order

    @property
    def nG(self) -> int:
        return self.G.order

    def lhd(self, g: int, x: int) -> int:
        """g ◁ x"""
        return int(self.act_l[g, x])

    def rhd(self, g: int, x: int) -> int:
        """g ▷ x"""
        return int(self.act_r[g, x])

    def has_trivial_left_action(self) -> bool:
        """True when ▷ is trivial (the semidirect case)."""
        return bool(np.all(self.act_r == np.arange(self.nF)[None, :]))

    def has_trivial_right_action(self) -> bool:
        return bool(np.all(self.act_l == np.arange(self.nG)[:, None]))

    def to_dict(self) -> dict:
        return {
            "F": self.F.to_dict(),
            "G": self.G.to_dict(),
            "act_l": self.act_l.tolist(),
            "act_r": self.act_r.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MatchedPair":
        F = make_group(data["F"]["mult"])
        G = make_group(data["G"]["mult"])
        return cls(F, G, np.array(data["act_l"]), np.array(data["act_r"]))

    def __repr__(self) -> str:
        return f"MatchedPair(|F|={self.nF}, |G|={self.nG})"


def validate_matched_pair(mp: MatchedPair) -> Report:
    """Exhaustively check the action axioms and the two compatibilities.

    The derived identities (``s ▷ 1 = 1``, ``1 ◁ x = 1`` and the two
    inverse formulas) are checked as well; they follow from the axioms,
    so a failure there while the axioms pass would indicate a bug.
    """
    L, Rt = mp.act_l, mp.act_r
    Fm, Gm = mp.F.mult, mp.G.mult
    nF, nG = mp.nF, mp.nG
    g = np.arange(nG)
    x = np.arange(nF)
    rep = Report("matched pair")

    rep.add(sweep("right action unit: g◁1 = g", L[:, 0] != g, ("g",), NotRightAction))
    lhs = L[L[:, :, None], x[None, None, :]]
    rhs = L[g[:, None, None], Fm[None, :, :]]
    rep.add(sweep("right action: (g◁x)◁y = g◁(xy)", lhs != rhs, ("g", "x", "y"), NotRightAction))

    rep.add(sweep("left action unit: 1▷x = x", Rt[0] != x, ("x",), NotLeftAction))
    lhs = Rt[Gm[:, :, None], x[None, None, :]]
    rhs = Rt[g[:, None, None], Rt[None, :, :]]
    rep.add(sweep("left action: (st)▷x = s▷(t▷x)", lhs != rhs, ("s", "t", "x"), NotLeftAction))

    # s ▷ xy = (s▷x)((s◁x)▷y)
    lhs = Rt[g[:, None, None], Fm[None, :, :]]
    rhs = Fm[Rt[:, :, None], Rt[L[:, :, None], x[None, None, :]]]
    rep.add(sweep("▷ across products: s▷xy = (s▷x)((s◁x)▷y)", lhs != rhs, ("s", "x", "y"), Comp1Fails))

    # st ◁ x = (s◁(t▷x))(t◁x)
    lhs = L[Gm[:, :, None], x[None, None, :]]
    rhs = Gm[L[g[:, None, None], Rt[None, :, :]], L[None, :, :]]
    rep.add(sweep("◁ across products: st◁x = (s◁(t▷x))(t◁x)", lhs != rhs, ("s", "t", "x"), Comp2Fails))

    if rep.passed:
        rep.add(sweep("derived: s▷1 = 1", Rt[:, 0] != 0, ("s",)))
        rep.add(sweep("derived: 1◁x = 1", L[0] != 0, ("x",)))
        lhs = mp.G.inv[L]
        rhs = L[mp.G.inv[:, None], Rt]
        rep.add(sweep("derived: (t◁y)⁻¹ = t⁻¹◁(t▷y)", lhs != rhs, ("t", "y")))
        lhs = mp.F.inv[Rt]
        rhs = Rt[L, mp.F.inv[None, :]]
        rep.add(sweep("derived: (t▷y)⁻¹ = (t◁y)▷y⁻¹", lhs != rhs, ("t", "y")))
    return rep


def trivial_pair(F: FiniteGroup, G: FiniteGroup) -> MatchedPair:
    """Both actions trivial: the ambient group is F x G."""
    act_l = np.repeat(np.arange(G.order)[:, None], F.order, axis=1)
    act_r = np.repeat(np.arange(F.order)[None, :], G.order, axis=0)
    return MatchedPair(F, G, act_l, act_r)


def from_right_action(F: FiniteGroup, G: FiniteGroup, perms: Sequence[Sequence[int]]) -> MatchedPair:
    """Semidirect pair with ▷ trivial; ``perms[x]`` is the map g ↦ g◁x.

    The permutations must form a right action of F by automorphisms of G,
    which ``validate_matched_pair`` confirms (the ◁ product law reduces to that).
    """
    perms = np.asarray(perms, dtype=np.int64)
    if perms.shape != (F.order, G.order):
        raise ValueError("need one permutation of G per element of F")
    act_r = np.repeat(np.arange(F.order)[None, :], G.order, axis=0)
    return MatchedPair(F, G, perms.T.copy(), act_r)


def from_factorization(
    sigma: FiniteGroup, f_elems: Sequence[int], g_elems: Sequence[int]
) -> MatchedPair:
    """Matched pair of an exact factorization Σ = F·G.

    Each product ``g x`` is rewritten uniquely as ``(g▷x)(g◁x)`` with the
    first factor in F and the second in G.  F and G are re-indexed with the
    identity first and the remaining elements in increasing Σ-index order.
    """
    check_subgroup(sigma, f_elems)
    check_subgroup(sigma, g_elems)
    F, f_emb = subgroup(sigma, f_elems)
    G, g_emb = subgroup(sigma, g_elems)
    f_arr = np.array(f_emb)
    g_arr = np.array(g_emb)
    # all products f*g; each element of Σ must occur exactly once
    prods = sigma.mult[f_arr[:, None], g_arr[None, :]]
    counts = np.bincount(prods.ravel(), minlength=sigma.order)
    if np.any(counts != 1):
        bad = int(np.argmax(counts != 1))
        raise NotExactFactorization(
            f"element {bad} of the ambient group has {int(counts[bad])} factorizations f·g",
            (bad,),
        )
    where_f = np.empty(sigma.order, dtype=np.int64)
    where_g = np.empty(sigma.order, dtype=np.int64)
    fi, gi = np.meshgrid(np.arange(F.order), np.arange(G.order), indexing="ij")
    where_f[prods.ravel()] = fi.ravel()
    where_g[prods.ravel()] = gi.ravel()
    gx = sigma.mult[g_arr[:, None], f_arr[None, :]]
    return MatchedPair(F, G, where_g[gx], where_f[gx])


# ---------------------------------------------------------------- squares


@dataclass(frozen=True)
class Square:
    """Top ``g``, left ``v``, right ``x``, bottom ``t`` with ``g x = v t``."""

    g: int
    v: int
    x: int
    t: int

    def is_horizontal_identity(self) -> bool:
        return self.g == 0

    def is_vertical_identity(self) -> bool:
        return self.x == 0


def square(mp: MatchedPair, g: int, x: int) -> Square:
    """The square with top ``g`` and right edge ``x`` (the basis element δ_g x)."""
    return Square(int(g), mp.rhd(g, x), int(x), mp.lhd(g, x))


def is_square(mp: MatchedPair, s: Square) -> bool:
    return mp.rhd(s.g, s.x) == s.v and mp.lhd(s.g, s.x) == s.t


def squares(mp: MatchedPair) -> Iterator[Square]:
    for g in range(mp.nG):
        for x in range(mp.nF):
            yield square(mp, g, x)


def square_compose(
    mp: MatchedPair, a: Square, b: Square, direction: Literal["horizontal", "vertical"]
) -> Square:
    """Horizontal product (``a`` left of ``b``) or vertical product (``a`` above ``b``)."""
    if direction == "horizontal":
        if a.x != b.v:
            raise NotComposable("right edge of the first square differs from left edge of the second", (a.x, b.v))
        return Square(mp.G.mul(a.g, b.g), a.v, b.x, mp.G.mul(a.t, b.t))
    if direction == "vertical":
        if a.t != b.g:
            raise NotComposable("bottom of the first square differs from top of the second", (a.t, b.g))
        return Square(a.g, mp.F.mul(a.v, b.v), mp.F.mul(a.x, b.x), b.t)
    raise ValueError(f"unknown direction {direction!r}")


def square_invert(
    mp: MatchedPair, a: Square, kind: Literal["horizontal", "vertical", "full"] = "full"
) -> Square:
    Gi, Fi = mp.G.inv, mp.F.inv
    if kind == "horizontal":
        return Square(int(Gi[a.g]), a.x, a.v, int(Gi[a.t]))
    if kind == "vertical":
        return Square(a.t, int(Fi[a.v]), int(Fi[a.x]), a.g)
    if kind == "full":
        return Square(int(Gi[a.t]), int(Fi[a.x]), int(Fi[a.v]), int(Gi[a.g]))
    raise ValueError(f"unknown inverse kind {kind!r}")


def complete_square(mp: MatchedPair, b: Square, c: Square) -> tuple[Square, Square]:
    """The unique ``a``, ``d`` forming the 2x2 block [[a, b], [c, d]].

    ``a`` shares its right edge with ``b`` and its bottom with ``c``;
    ``d`` sits below ``b`` and to the right of ``c``.
    """
    top_a = mp.lhd(c.g, int(mp.F.inv[b.v]))
    a = square(mp, top_a, b.v)
    right_d = mp.rhd(int(mp.G.inv[b.t]), c.x)
    d = square(mp, b.t, right_d)
    return a, d
