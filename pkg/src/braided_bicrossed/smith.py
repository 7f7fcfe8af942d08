"""Smith normal form over Z and finite abelian groups built from it.

The decomposition is computed with exact Python integers (numpy object
arrays for vectorized row/column operations) and minimal-absolute-value
pivoting.  Besides ``U`` and ``V`` the inverse of ``V`` is tracked, which
is what presenting a quotient Z^n / L needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ M @ V == D`` with unimodular ``U``, ``V``."""

    U: np.ndarray
    D: np.ndarray
    V: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _as_object(m) -> np.ndarray:
    arr = np.array(m, dtype=object)
    if arr.ndim != 2:
        arr = arr.reshape(len(m), -1)
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


def _eye(n: int) -> np.ndarray:
    e = np.zeros((n, n), dtype=object)
    for i in range(n):
        e[i, i] = 1
    return e


def _snf(a: np.ndarray, track_u: bool, extra_rows: np.ndarray | None):
    """Core elimination.  ``extra_rows`` (m x k) receives every row operation."""
    m, n = a.shape
    u = _eye(m) if track_u else None
    v = _eye(n)
    v_inv = _eye(n)

    def swap_rows(i: int, j: int) -> None:
        if i == j:
            return
        a[[i, j]] = a[[j, i]]
        if u is not None:
            u[[i, j]] = u[[j, i]]
        if extra_rows is not None:
            extra_rows[[i, j]] = extra_rows[[j, i]]

    def swap_cols(i: int, j: int) -> None:
        if i == j:
            return
        a[:, [i, j]] = a[:, [j, i]]
        v[:, [i, j]] = v[:, [j, i]]
        v_inv[[i, j]] = v_inv[[j, i]]

    t = 0
    while t < min(m, n):
        sub = a[t:, t:]
        nz = np.argwhere(sub != 0)
        if nz.size == 0:
            break
        absval = np.abs(sub[nz[:, 0], nz[:, 1]]).astype(object)
        k = int(np.argmin(absval))
        swap_rows(t, t + int(nz[k, 0]))
        swap_cols(t, t + int(nz[k, 1]))
        while True:
            p = a[t, t]
            # clear column t
            col = a[t + 1 :, t]
            if np.any(col != 0):
                q = col // p
                a[t + 1 :] -= np.outer(q, a[t])
                if u is not None:
                    u[t + 1 :] -= np.outer(q, u[t])
                if extra_rows is not None:
                    extra_rows[t + 1 :] -= np.outer(q, extra_rows[t])
            # clear row t
            row = a[t, t + 1 :]
            if np.any(row != 0):
                q = row // p
                a[:, t + 1 :] -= np.outer(a[:, t], q)
                v[:, t + 1 :] -= np.outer(v[:, t], q)
                v_inv[t] += q @ v_inv[t + 1 :]
            col = a[t + 1 :, t]
            row = a[t, t + 1 :]
            if np.any(col != 0) or np.any(row != 0):
                # a remainder survived: bring the smallest one to the pivot
                cand = [(abs(x), i + t + 1, "r") for i, x in enumerate(col) if x != 0]
                cand += [(abs(x), j + t + 1, "c") for j, x in enumerate(row) if x != 0]
                _, idx, kind = min(cand)
                if kind == "r":
                    swap_rows(t, idx)
                else:
                    swap_cols(t, idx)
                continue
            # divisibility: the pivot must divide the remaining block
            rest = a[t + 1 :, t + 1 :]
            bad = np.argwhere(rest % p != 0) if rest.size else np.zeros((0, 2))
            if len(bad):
                i = t + 1 + int(bad[0][0])
                a[t] += a[i]
                if u is not None:
                    u[t] += u[i]
                if extra_rows is not None:
                    extra_rows[t] += extra_rows[i]
                continue
            break
        if a[t, t] < 0:
            a[t] = -a[t]
            if u is not None:
                u[t] = -u[t]
            if extra_rows is not None:
                extra_rows[t] = -extra_rows[t]
        t += 1
    return u, a, v, v_inv


def smith_normal_form(m: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Return ``U, D, V`` with ``U @ M @ V == D`` and d_1 | d_2 | ... ."""
    a = _as_object(m)
    if a.size == 0:
        rows = a.shape[0]
        cols = a.shape[1] if a.ndim == 2 else 0
        return SmithDecomposition(_eye(rows), a.reshape(rows, cols), _eye(cols), _eye(cols))
    u, d, v, v_inv = _snf(a.copy(), True, None)
    return SmithDecomposition(u, d, v, v_inv)


def solve_mod(a: Sequence[Sequence[int]], b: Sequence[int], modulus: int):
    """One solution of ``a @ x == b (mod modulus)`` plus a kernel basis.

    Returns ``(x, kernel)`` or ``None`` when no solution exists.  Every
    solution is ``x`` plus a Z-combination of the kernel vectors, reduced
    modulo ``modulus``.
    """
    a = _as_object(a)
    m, n = a.shape
    rhs = np.array([[int(v)] for v in b], dtype=object).reshape(m, 1)
    if m == 0:
        return [0] * n, [[int(i == j) for i in range(n)] for j in range(n)]
    _, d, v, _ = _snf(a.copy(), False, rhs)
    y = [0] * n
    kernel = []
    for i in range(n):
        di = int(d[i, i]) if i < m else 0
        ci = int(rhs[i, 0]) if i < m else 0
        g = gcd(di, modulus)
        if ci % g:
            return None
        if di % modulus == 0:
            kernel.append(i)
            y[i] = 0
            continue
        mod_g = modulus // g
        y[i] = (ci // g) * pow(di // g, -1, mod_g) % mod_g if mod_g > 1 else 0
        if g > 1:
            kernel.append((i, mod_g))
    for i in range(n, m):
        if int(rhs[i, 0]) % modulus:
            return None
    x = [int(sum(v[r, i] * y[i] for i in range(n))) % modulus for r in range(n)]
    basis = []
    for entry in kernel:
        if isinstance(entry, tuple):
            i, step = entry
        else:
            i, step = entry, 1
        basis.append([int(v[r, i] * step) % modulus for r in range(n)])
    return x, basis


@dataclass(frozen=True)
class AbelianGroup:
    """Z/d_1 x ... x Z/d_r with d_1 | d_2 | ... and each d_i >= 2."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        fs = tuple(int(d) for d in self.factors)
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be at least 2")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def from_orders(cls, orders: Sequence[int]) -> "AbelianGroup":
        """Normalize an arbitrary product of cyclic groups via SNF."""
        diag = [int(o) for o in orders if int(o) != 1]
        if not diag:
            return cls(())
        d = smith_normal_form(np.diag(diag)).diagonal
        return cls(tuple(x for x in d if x != 1))

    @property
    def order(self) -> int:
        out = 1
        for d in self.factors:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return self.factors[-1] if self.factors else 1

    @property
    def rank(self) -> int:
        return len(self.factors)

    def normalize(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) % d for x, d in zip(v, self.factors))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def add(self, v: Sequence[int], w: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % d for a, b, d in zip(v, w, self.factors))

    def neg(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % d for a, d in zip(v, self.factors))

    def index(self, v: Sequence[int]) -> int:
        """Mixed-radix index, last coordinate fastest."""
        idx = 0
        for x, d in zip(v, self.factors):
            idx = idx * d + (int(x) % d)
        return idx

    def element(self, idx: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.factors):
            out.append(idx % d)
            idx //= d
        return tuple(reversed(out))

    def elements(self) -> list[tuple[int, ...]]:
        return [self.element(i) for i in range(self.order)]

    def as_group(self):
        from .groups import make_group

        n = self.order
        els = self.elements()
        return make_group([[self.index(self.add(a, b)) for b in els] for a in els])


@dataclass(frozen=True)
class Character:
    """A homomorphism A -> mu_N written as an exponent vector.

    ``<chi, v> = zeta_N^{sum_i (N/d_i) c_i v_i}``; every d_i must divide N.
    """

    group: AbelianGroup
    conductor: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(self.conductor % d for d in self.group.factors):
            raise ValueError("each invariant factor must divide the conductor")
        object.__setattr__(self, "coeffs", self.group.normalize(self.coeffs))

    def pair(self, v: Sequence[int]) -> int:
        """Exponent of <chi, v> modulo the conductor."""
        n = self.conductor
        return sum((n // d) * c * x for c, x, d in zip(self.coeffs, v, self.group.factors)) % n

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, self.conductor, self.group.add(self.coeffs, other.coeffs))

    @classmethod
    def from_values(cls, group: AbelianGroup, conductor: int, values: Sequence[int]) -> "Character":
        """Character taking value zeta_N^{values[i]} on the i-th generator."""
        coeffs = []
        for val, d in zip(values, group.factors):
            step = conductor // d
            if val % step:
                raise ValueError("value is not a d-th root of unity")
            coeffs.append((val // step) % d)
        return cls(group, conductor, tuple(coeffs))


@dataclass(frozen=True)
class Quotient:
    """Presentation of Z^n / L as an AbelianGroup with a coordinate map."""

    group: AbelianGroup
    coords: np.ndarray  # n x r integer matrix: e_j -> coords[j] in the group
    lifts: np.ndarray  # r x n: generator i lifts to lifts[i] in Z^n

    def image(self, v: Sequence[int]) -> tuple[int, ...]:
        vec = np.asarray(v, dtype=object)
        return self.group.normalize(vec @ self.coords)


def lattice_quotient(relations: Sequence[Sequence[int]], n: int, modulus: int | None = None) -> Quotient:
    """Compute Z^n / (row span of ``relations``); assumed finite.

    When ``modulus`` is given the lattice is taken to contain modulus·Z^n
    (those rows need not be listed) and the work is done in int64 modulo
    each prime power of the modulus, which is much faster for tall inputs.
    """
    if modulus is not None:
        return _modular_quotient(np.asarray(relations, dtype=np.int64).reshape(-1, n), n, int(modulus))
    rel = _as_object(relations) if len(relations) else np.zeros((0, n), dtype=object)
    rel = _dedupe_rows(rel)
    _, d, v, v_inv = _snf(rel.copy(), False, None)
    diag = [int(d[i, i]) if i < d.shape[0] else 0 for i in range(n)]
    if any(x == 0 for x in diag):
        raise ValueError("relation lattice does not have full rank; quotient is infinite")
    keep = [i for i, x in enumerate(diag) if x != 1]
    group = AbelianGroup(tuple(diag[i] for i in keep))
    coords = np.array([[v[j, i] for i in keep] for j in range(n)], dtype=object).reshape(n, len(keep))
    lifts = np.array([[v_inv[i, j] for j in range(n)] for i in keep], dtype=object).reshape(len(keep), n)
    return Quotient(group, coords, lifts)


def _prime_powers(m: int) -> list[tuple[int, int]]:
    out, p = [], 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def _valuation(a: np.ndarray, p: int, e: int) -> np.ndarray:
    """p-adic valuation of entries of Z/p^e, with 0 mapped to e."""
    v = np.full(a.shape, e, dtype=np.int64)
    pk = 1
    for k in range(e):
        v[(a % (pk * p) != 0) & (v == e)] = k
        pk *= p
    return v


def _local_smith(a: np.ndarray, p: int, e: int):
    """Smith form of the rows of ``a`` over Z/p^e.

    Returns the exponents t_k (diagonal p^{t_k}, with e where the column is
    untouched) and V, V^{-1} modulo p^e.  In a local ring the entry of least
    valuation divides every other entry, so each pivot clears its row and
    column in one vectorized step.
    """
    P = p**e
    a = a % P
    rows, n = a.shape
    # row echelon first: at most n rows survive
    k = 0
    for c in range(n):
        if k == a.shape[0]:
            break
        col = a[k:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        val = _valuation(col[nz], p, e)
        i = k + int(nz[np.argmin(val)])
        a[[k, i]] = a[[i, k]]
        t = int(val.min())
        u = pow(int(a[k, c]) // p**t, -1, P)
        a[k] = a[k] * u % P
        hit = k + 1 + np.flatnonzero(a[k + 1:, c])
        if hit.size:
            f = a[hit, c] // p**t
            a[hit] = (a[hit] - f[:, None] * a[k]) % P
            dead = hit[~np.any(a[hit] != 0, axis=1)]
            if dead.size:
                a = np.delete(a, dead, axis=0)
        k += 1
    a = a[:k]
    v = np.eye(n, dtype=np.int64)
    v_inv = np.eye(n, dtype=np.int64)
    exps = []
    for k in range(min(a.shape[0], n)):
        sub = a[k:, k:]
        if not sub.any():
            break
        val = _valuation(sub, p, e)
        i, j = np.unravel_index(int(np.argmin(val)), val.shape)
        i, j = k + int(i), k + int(j)
        t = int(val[i - k, j - k])
        a[[k, i]] = a[[i, k]]
        a[:, [k, j]] = a[:, [j, k]]
        v[:, [k, j]] = v[:, [j, k]]
        v_inv[[k, j]] = v_inv[[j, k]]
        unit = int(a[k, k]) // p**t
        u = pow(unit, -1, P)
        a[:, k] = a[:, k] * u % P
        v[:, k] = v[:, k] * u % P
        v_inv[k] = v_inv[k] * unit % P
        f = a[k + 1:, k] // p**t
        a[k + 1:] = (a[k + 1:] - f[:, None] * a[k]) % P
        g = a[k, k + 1:] // p**t
        v[:, k + 1:] = (v[:, k + 1:] - v[:, [k]] * g[None, :]) % P
        v_inv[k] = (v_inv[k] + g @ v_inv[k + 1:]) % P
        a[k, k + 1:] = 0
        exps.append(t)
    exps += [e] * (n - len(exps))
    return exps, v, v_inv


def _modular_quotient(rel: np.ndarray, n: int, m: int) -> Quotient:
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return Quotient(AbelianGroup(()), np.zeros((n, 0), dtype=object), np.zeros((0, n), dtype=object))
    rel = np.unique(rel % m, axis=0) if rel.size else np.zeros((0, n), dtype=np.int64)
    # per prime: the nontrivial components as (exponent, column) ascending
    parts = []
    for p, e in _prime_powers(m):
        exps, v, v_inv = _local_smith(rel.copy(), p, e)
        comps = [(t, col) for col, t in enumerate(exps) if t > 0]
        w = pow(m // p**e, -1, p**e) * (m // p**e) % m  # 1 mod p^e, 0 mod the rest of m
        parts.append((p, comps, v, v_inv, w))
    r = max((len(c) for _, c, *_ in parts), default=0)
    factors = [1] * r
    coords = np.zeros((n, r), dtype=object)
    lifts = np.zeros((r, n), dtype=object)
    aligned = []
    for p, comps, v, v_inv, w in parts:
        offset = r - len(comps)
        aligned.append([(offset + i, p**t, col) for i, (t, col) in enumerate(comps)])
        for k, pt, _ in aligned[-1]:
            factors[k] *= pt
    for (p, comps, v, v_inv, w), items in zip(parts, aligned):
        for k, pt, col in items:
            d = factors[k]
            crt = (d // pt) * pow(d // pt, -1, pt) % d
            coords[:, k] += np.array([int(x) % pt * crt for x in v[:, col]], dtype=object)
            lifts[k] += np.array([int(x) * w for x in v_inv[col]], dtype=object)
    for k in range(r):
        coords[:, k] %= factors[k]
        lifts[k] %= m
    return Quotient(AbelianGroup(tuple(factors)), coords, lifts)


def _dedupe_rows(a: np.ndarray) -> np.ndarray:
    seen = set()
    rows = []
    for r in a:
        key = tuple(int(x) for x in r)
        if any(key) and key not in seen:
            seen.add(key)
            rows.append(r)
    if not rows:
        return np.zeros((0, a.shape[1]), dtype=object)
    return np.array(rows, dtype=object)
