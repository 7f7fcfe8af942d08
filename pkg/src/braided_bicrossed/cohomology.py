"""Normalized cochains on G^q × F^p, the differentials δ and δ', and gauge equivalence.

A cochain of bidegree (q, p) is an exponent table indexed
``[g_q, ..., g_1, x_1, ..., x_p]`` with values modulo the conductor.

* δ raises p:  δf(g; x_1..x_{p+1}) = f(g twisted by x_1; x_2..x_{p+1})
  · Π_i f(..x_i x_{i+1}..)^{(-1)^i} · f(g; x_1..x_p)^{(-1)^{p+1}},
  where g_i is replaced by g_i ◁ (g_{i-1}⋯g_1 ▷ x_1).
* δ' raises q:  (δ'f)^{(-1)^p} = f(g_{q+1}..g_2; g_1-twisted x)
  · Π_i f(..g_{i+1}g_i..)^{(-1)^i} · f(g_q..g_1; x)^{(-1)^{q+1}},
  where x_j is replaced by (g_1 ◁ x_1⋯x_{j-1}) ▷ x_j.

The pair (τ, σ) sits in total degree 2 with τ of bidegree (2, 1) and σ of
bidegree (1, 2); ν sits in total degree 1 with bidegree (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .braiding import compute_q
from .cocycles import BicrossedDatum
from .errors import BidegreeUnsupported
from .matched_pair import MatchedPair
from .report import Report, sweep
from .smith import solve_mod

SUPPORTED_SOURCES = {(1, 1), (2, 1), (1, 2)}


@dataclass(frozen=True, eq=False)
class Cochain:
    bidegree: tuple[int, int]
    table: np.ndarray
    conductor: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "table", np.mod(np.asarray(self.table, dtype=np.int64), self.conductor))

    @property
    def q(self) -> int:
        return self.bidegree[0]

    @property
    def p(self) -> int:
        return self.bidegree[1]

    def is_normalized(self) -> bool:
        t = self.table
        for axis in range(t.ndim):
            if np.any(np.take(t, 0, axis=axis) != 0):
                return False
        return True

    def is_trivial(self) -> bool:
        return bool(np.all(self.table == 0))

    def __mul__(self, other: "Cochain") -> "Cochain":
        if self.bidegree != other.bidegree or self.conductor != other.conductor:
            raise ValueError("cochains must share bidegree and conductor")
        return Cochain(self.bidegree, self.table + other.table, self.conductor)

    def inverse(self) -> "Cochain":
        return Cochain(self.bidegree, -self.table, self.conductor)


def _shape(mp: MatchedPair, q: int, p: int) -> tuple[int, ...]:
    return (mp.nG,) * q + (mp.nF,) * p


def _grid(shape: tuple[int, ...]) -> list[np.ndarray]:
    k = len(shape)
    out = []
    for i, n in enumerate(shape):
        s = [1] * k
        s[i] = n
        out.append(np.arange(n).reshape(s))
    return out


def _check_source(f: Cochain, mp: MatchedPair) -> None:
    if f.bidegree not in SUPPORTED_SOURCES:
        raise BidegreeUnsupported(
            f"differentials are implemented on bidegrees {sorted(SUPPORTED_SOURCES)}, not {f.bidegree}",
            f.bidegree,
        )
    if f.table.shape != _shape(mp, f.q, f.p):
        raise ValueError(f"table shape {f.table.shape} does not match bidegree {f.bidegree}")


def delta_h(mp: MatchedPair, f: Cochain) -> Cochain:
    """δ: bidegree (q, p) -> (q, p + 1)."""
    _check_source(f, mp)
    q, p = f.bidegree
    L, R, Gm, Fm = mp.act_l, mp.act_r, mp.G.mult, mp.F.mult
    idx = _grid(_shape(mp, q, p + 1))
    gs = idx[:q]  # g_q, ..., g_1
    xs = idx[q:]  # x_1, ..., x_{p+1}
    T = f.table
    # twisted G-arguments: g_i ◁ (g_{i-1}⋯g_1 ▷ x_1), built from g_1 upwards
    prefix = np.zeros_like(gs[-1])
    twisted = []
    for gi in reversed(gs):
        twisted.append(L[gi, R[prefix, xs[0]]])
        prefix = Gm[gi, prefix]
    twisted.reverse()
    out = T[tuple(twisted) + tuple(xs[1:])]
    for i in range(1, p + 1):
        merged = xs[: i - 1] + [Fm[xs[i - 1], xs[i]]] + xs[i + 1 :]
        out = out + (-1) ** i * T[tuple(gs) + tuple(merged)]
    out = out + (-1) ** (p + 1) * T[tuple(gs) + tuple(xs[:p])]
    return Cochain((q, p + 1), np.broadcast_to(out, _shape(mp, q, p + 1)), f.conductor)


def delta_v(mp: MatchedPair, f: Cochain, signed: bool = True) -> Cochain:
    """δ': bidegree (q, p) -> (q + 1, p).

    ``signed=False`` drops the overall (-1)^p, giving the bare alternating sum.
    """
    _check_source(f, mp)
    q, p = f.bidegree
    L, R, Gm, Fm = mp.act_l, mp.act_r, mp.G.mult, mp.F.mult
    idx = _grid(_shape(mp, q + 1, p))
    gs = idx[: q + 1]  # g_{q+1}, ..., g_1
    xs = idx[q + 1 :]
    T = f.table
    g1 = gs[-1]
    # twisted F-arguments: (g_1 ◁ x_1⋯x_{j-1}) ▷ x_j
    prefix = np.zeros_like(xs[0])
    twisted = []
    for xj in xs:
        twisted.append(R[L[g1, prefix], xj])
        prefix = Fm[prefix, xj]
    out = T[tuple(gs[:-1]) + tuple(twisted)]
    for i in range(1, q + 1):
        # g's are stored leftmost-first, so g_{i+1} g_i sits at positions q-i, q-i+1
        pos = q - i
        merged = gs[:pos] + [Gm[gs[pos], gs[pos + 1]]] + gs[pos + 2 :]
        out = out + (-1) ** i * T[tuple(merged) + tuple(xs)]
    out = out + (-1) ** (q + 1) * T[tuple(gs[1:]) + tuple(xs)]
    if signed and p % 2:
        out = -out
    return Cochain((q + 1, p), np.broadcast_to(out, _shape(mp, q + 1, p)), f.conductor)


# ------------------------------------------------------------------ total complex


def tau_cochain(datum: BicrossedDatum) -> Cochain:
    """τ as a (2, 1)-cochain: [g_2, g_1, x] = τ_x(g_2, g_1)."""
    return Cochain((2, 1), datum.tau.transpose(1, 2, 0), datum.conductor)


def sigma_cochain(datum: BicrossedDatum) -> Cochain:
    """σ as a (1, 2)-cochain: [g, x, y] = σ_g(x, y)."""
    return Cochain((1, 2), datum.sigma, datum.conductor)


def total_differential_degree1(mp: MatchedPair, nu: Cochain) -> tuple[Cochain, Cochain]:
    """D ν = (δ'ν, δν), components of bidegree (2, 1) and (1, 2)."""
    return delta_v(mp, nu), delta_h(mp, nu)


def total_differential_degree2(mp: MatchedPair, tau: Cochain, sigma: Cochain) -> tuple[Cochain, Cochain, Cochain]:
    """D(τ, σ) = (δ'τ, (δτ·δ'σ)⁻¹, δσ) of bidegrees (3,1), (2,2), (1,3).

    The middle sign makes D∘D trivial given that δ and the signed δ'
    anticommute in bidegree (1, 1).
    """
    p1 = delta_v(mp, tau)
    p2 = (delta_h(mp, tau) * delta_v(mp, sigma)).inverse()
    p3 = delta_h(mp, sigma)
    return p1, p2, p3


def total_differential(datum: BicrossedDatum) -> tuple[Cochain, Cochain, Cochain]:
    return total_differential_degree2(datum.mp, tau_cochain(datum), sigma_cochain(datum))


def verify_complex_identities(mp: MatchedPair, f: Cochain) -> Report:
    """δ∘δ, δ'∘δ', and the (anti)commutation of δ with δ' on one (1,1)-cochain."""
    rep = Report("double complex identities")
    rep.add(sweep("δ∘δ = 1", delta_h(mp, delta_h(mp, f)).table != 0))
    rep.add(sweep("δ'∘δ' = 1", delta_v(mp, delta_v(mp, f)).table != 0))
    a = delta_h(mp, delta_v(mp, f)).table
    b = delta_v(mp, delta_h(mp, f)).table
    rep.add(sweep("δδ' = (δ'δ)⁻¹ with the signed δ'", (a + b) % f.conductor != 0))
    a = delta_h(mp, delta_v(mp, f, signed=False)).table
    b = delta_v(mp, delta_h(mp, f), signed=False).table
    rep.add(sweep("δδ' = δ'δ without the sign", (a - b) % f.conductor != 0))
    d1 = total_differential_degree1(mp, f)
    tot = total_differential_degree2(mp, *d1)
    rep.add(sweep("D∘D = 1", np.concatenate([c.table.ravel() for c in tot]) != 0))
    return rep


def cocycle_verdicts(datum: BicrossedDatum) -> Report:
    """p1 and p3 of D(τ, σ) vanish exactly when τ and σ satisfy their cocycle laws."""
    p1, _, p3 = total_differential(datum)
    rep = Report("cocycle conditions via the total differential")
    rep.add(sweep("p1 = δ'τ trivial", p1.table != 0, ("g3", "g2", "g1", "x")))
    rep.add(sweep("p3 = δσ trivial", p3.table != 0, ("g", "x", "y", "z")))
    return rep


def verify_corollary_q(datum: BicrossedDatum, q: np.ndarray | None = None) -> Report:
    """Q^{x,y}_{g,h} = p2(D(τ,σ))(h◁(g▷x)⁻¹, g; x, (g◁x)⁻¹▷y) for all tuples."""
    mp = datum.mp
    if q is None:
        q = compute_q(datum)
    _, p2, _ = total_differential(datum)
    g = np.arange(mp.nG)[:, None, None, None]
    h = np.arange(mp.nG)[None, :, None, None]
    x = np.arange(mp.nF)[None, None, :, None]
    y = np.arange(mp.nF)[None, None, None, :]
    g2 = mp.act_l[h, mp.F.inv[mp.act_r[g, x]]]
    y2 = mp.act_r[mp.G.inv[mp.act_l[g, x]], y]
    val = p2.table[g2, g, x, y2]
    rep = Report("braiding from the total differential")
    rep.add(sweep("Q equals p2 at the shifted arguments", (val - q) % datum.conductor != 0, ("g", "h", "x", "y")))
    return rep


# ------------------------------------------------------------------ equivalence


@dataclass(frozen=True, eq=False)
class GaugeSolutions:
    """All ν with (τ, σ) = (τ', σ')·Dν: ``particular`` plus the span of ``kernel``.

    Tables are laid out [g, x] with exponents modulo ``conductor``.
    """

    mp: MatchedPair
    conductor: int
    particular: np.ndarray
    kernel: tuple[np.ndarray, ...]

    def contains(self, nu: np.ndarray) -> bool:
        nu = np.mod(np.asarray(nu, dtype=np.int64), self.conductor)
        diff = nu - self.particular
        if not self.kernel:
            return bool(np.all(diff % self.conductor == 0))
        mat = [list(k.ravel()) for k in self.kernel]
        cols = np.array(mat, dtype=np.int64).T
        return solve_mod(cols.tolist(), list(diff.ravel()), self.conductor) is not None

    def enumerate(self, limit: int | None = None) -> Iterator[np.ndarray]:
        """Distinct solutions (the kernel span may be redundant, so duplicates are skipped)."""
        seen = set()
        ranges = [range(self.conductor)] * len(self.kernel)
        gen = (
            np.mod(self.particular + sum(c * k for c, k in zip(coeffs, self.kernel)), self.conductor)
            for coeffs in product(*ranges)
        )
        count = 0
        for nu in gen:
            key = nu.tobytes()
            if key in seen:
                continue
            seen.add(key)
            yield nu
            count += 1
            if limit is not None and count >= limit:
                return


def gauge_residuals(left: BicrossedDatum, right: BicrossedDatum, nu: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Residuals of τ = τ'·δ'ν and σ = σ'·δν for a candidate ν[g, x]."""
    mp, n = left.mp, left.conductor
    dv, dh = total_differential_degree1(mp, Cochain((1, 1), nu, n))
    tau_res = (tau_cochain(left).table - tau_cochain(right).table - dv.table) % n
    sigma_res = (left.sigma - right.sigma - dh.table) % n
    return tau_res, sigma_res


def solve_equivalence(left: BicrossedDatum, right: BicrossedDatum) -> GaugeSolutions | None:
    """Solve (τ, σ) = (τ', σ')·Dν for a normalized ν, or return ``None``.

    The braidings are compared first: an isomorphism of extensions
    commutes with the braidings, so different Q tables rule it out.
    """
    if left.mp is not right.mp and not (
        np.array_equal(left.mp.act_l, right.mp.act_l) and np.array_equal(left.mp.act_r, right.mp.act_r)
    ):
        raise ValueError("data must share the matched pair")
    if left.conductor != right.conductor:
        raise ValueError("data must share the conductor")
    mp, n = left.mp, left.conductor
    if not np.array_equal(compute_q(left), compute_q(right)):
        return None
    unknown = {(g, x): i for i, (g, x) in enumerate(product(range(1, mp.nG), range(1, mp.nF)))}
    nvar = len(unknown)
    if nvar == 0:
        ok = not (left.sigma - right.sigma).any() and not (left.tau - right.tau).any()
        zero = np.zeros((mp.nG, mp.nF), dtype=np.int64)
        return GaugeSolutions(mp, n, zero, ()) if ok else None
    # Dν is linear in ν; its columns are the images of the unit cochains
    cols = []
    for (g, x) in unknown:
        e = np.zeros((mp.nG, mp.nF), dtype=np.int64)
        e[g, x] = 1
        dv, dh = total_differential_degree1(mp, Cochain((1, 1), e, n))
        cols.append(np.concatenate([dv.table.ravel(), dh.table.ravel()]))
    mat = np.array(cols, dtype=np.int64).T
    rhs = np.concatenate(
        [
            (tau_cochain(left).table - tau_cochain(right).table).ravel(),
            (left.sigma - right.sigma).ravel(),
        ]
    ) % n
    keep = mat.any(axis=1) | (rhs != 0)
    sol = solve_mod(mat[keep].tolist(), rhs[keep].tolist(), n)
    if sol is None:
        return None
    vec, kernel = sol

    def as_table(v) -> np.ndarray:
        t = np.zeros((mp.nG, mp.nF), dtype=np.int64)
        for (g, x), i in unknown.items():
            t[g, x] = int(v[i]) % n
        return t

    kernel_tables = tuple(k for k in (as_table(v) for v in kernel) if k.any())
    return GaugeSolutions(mp, n, as_table(vec), kernel_tables)


def check_gauge(left: BicrossedDatum, right: BicrossedDatum, nu: np.ndarray) -> Report:
    tau_res, sigma_res = gauge_residuals(left, right, nu)
    rep = Report("gauge equivalence via the total differential")
    rep.add(sweep("τ = τ'·δ'ν", tau_res != 0, ("g2", "g1", "x")))
    rep.add(sweep("σ = σ'·δν", sigma_res != 0, ("g", "x", "y")))
    return rep

