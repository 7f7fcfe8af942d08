"""Finite groups stored as dense multiplication tables.

Elements are the integers ``0..n-1`` and the identity is always ``0``.
Tables are numpy arrays so that products can be taken over whole index
grids at once (``G.mult[a, b]`` with broadcast index arrays).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

import numpy as np

from .errors import NoIdentity, NotAssociative, NotInvertible, NotSubgroup


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mult: np.ndarray
    inv: np.ndarray
    labels: tuple[str, ...] = field(default=())

    @property
    def order(self) -> int:
        return int(self.mult.shape[0])

    def __len__(self) -> int:
        return self.order

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def prod(self, *elems: int) -> int:
        acc = 0
        for e in elems:
            acc = int(self.mult[acc, e])
        return acc

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv[a]), -k
        acc = 0
        for _ in range(k):
            acc = int(self.mult[acc, a])
        return acc

    def element_order(self, a: int) -> int:
        k, acc = 1, a
        while acc != 0:
            acc = int(self.mult[acc, a])
            k += 1
        return k

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels else str(a)

    def elements(self) -> range:
        return range(self.order)

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        span = {0}
        for a in range(1, self.order):
            if a not in span:
                gens.append(a)
                span = set(generated_subgroup(self, gens))
            if len(span) == self.order:
                break
        return gens

    def to_dict(self) -> dict:
        return {"order": self.order, "mult": self.mult.tolist()}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.mult, other.mult)

    def __hash__(self) -> int:
        return hash(self.mult.tobytes())

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"


def make_group(mult_table: Sequence[Sequence[int]], labels: Sequence[str] = ()) -> FiniteGroup:
    """Validate a multiplication table and build the group.

    The identity must sit at index 0.  Failures raise ``NoIdentity``,
    ``NotInvertible`` or ``NotAssociative`` with the offending elements.
    """
    mult = np.array(mult_table, dtype=np.int64)
    if mult.ndim != 2 or mult.shape[0] != mult.shape[1] or mult.shape[0] == 0:
        raise ValueError("multiplication table must be a non-empty square array")
    n = mult.shape[0]
    if mult.min() < 0 or mult.max() >= n:
        raise ValueError("table entries out of range")
    ar = np.arange(n)
    if not (np.array_equal(mult[0], ar) and np.array_equal(mult[:, 0], ar)):
        bad = int(np.argmax((mult[0] != ar) | (mult[:, 0] != ar)))
        raise NoIdentity(f"index 0 is not a two-sided identity (element {bad})", (bad,))
    inv = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        right = np.flatnonzero(mult[a] == 0)
        left = np.flatnonzero(mult[:, a] == 0)
        if right.size != 1 or left.size != 1 or right[0] != left[0]:
            raise NotInvertible(f"element {a} has no two-sided inverse", (a,))
        inv[a] = right[0]
    # associativity over all triples, vectorized
    lhs = mult[mult[:, :, None], ar[None, None, :]]
    rhs = mult[ar[:, None, None], mult[None, :, :]]
    bad = lhs != rhs
    if bad.any():
        a, b, c = (int(i) for i in np.argwhere(bad)[0])
        raise NotAssociative(f"(ab)c != a(bc) for a={a}, b={b}, c={c}", (a, b, c))
    for r in range(n):
        if np.unique(mult[r]).size != n or np.unique(mult[:, r]).size != n:
            raise NotInvertible(f"row or column {r} is not a permutation", (r,))
    mult.setflags(write=False)
    inv.setflags(write=False)
    return FiniteGroup(mult, inv, tuple(labels))


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    ar = np.arange(n)
    return make_group((ar[:, None] + ar[None, :]) % n)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Element (i, j) has index i*|B| + j."""
    na, nb = a.order, b.order
    i = np.arange(na * nb)
    ia, ib = i // nb, i % nb
    mult = a.mult[ia[:, None], ia[None, :]] * nb + b.mult[ib[:, None], ib[None, :]]
    return make_group(mult)


def group_from_permutations(perms: Sequence[Sequence[int]]) -> FiniteGroup:
    """Group generated by closure of ``perms``; identity placed first.

    Composition is ``(p*q)(i) = p(q(i))``.
    """
    degree = len(perms[0])
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    gens = [tuple(p) for p in perms]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                c = tuple(e[g[i]] for i in range(degree))
                if c not in index:
                    index[c] = len(elems)
                    elems.append(c)
                    nxt.append(c)
        frontier = nxt
    n = len(elems)
    mult = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            mult[i, j] = index[tuple(p[q[k]] for k in range(degree))]
    labels = tuple(_cycle_label(p) for p in elems)
    return make_group(mult, labels)


def symmetric_group(n: int) -> FiniteGroup:
    perms = sorted(permutations(range(n)))
    return group_from_permutations(perms)


def _cycle_label(p: Sequence[int]) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            continue
        cyc, c = [], s
        while c not in seen:
            seen.add(c)
            cyc.append(c + 1)
            c = p[c]
        cycles.append("(" + "".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def generated_subgroup(g: FiniteGroup, gens: Sequence[int]) -> list[int]:
    span = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                c = int(g.mult[e, s])
                if c not in span:
                    span.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(span)


def check_subgroup(g: FiniteGroup, elems: Sequence[int]) -> None:
    s = set(int(e) for e in elems)
    if 0 not in s:
        raise NotSubgroup("subset does not contain the identity", (0,))
    for a in s:
        for b in s:
            if int(g.mult[a, b]) not in s:
                raise NotSubgroup(f"{a}*{b} leaves the subset", (a, b))


def subgroup(g: FiniteGroup, elems: Sequence[int]) -> tuple[FiniteGroup, list[int]]:
    """Induced group on ``elems`` (identity first) and the embedding list."""
    check_subgroup(g, elems)
    emb = [0] + sorted(int(e) for e in set(elems) - {0})
    pos = {e: i for i, e in enumerate(emb)}
    mult = [[pos[int(g.mult[a, b])] for b in emb] for a in emb]
    labels = tuple(g.label(e) for e in emb) if g.labels else ()
    return make_group(mult, labels), emb
