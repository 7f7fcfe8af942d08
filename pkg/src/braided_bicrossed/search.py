"""Brute-force enumeration of braided compatible data on small matched pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .braiding import check_q_multiplicativity, compatibility_residual, compute_q
from .cocycles import BicrossedDatum
from .matched_pair import MatchedPair
from .smith import solve_mod

MAX_ORDER_PRODUCT = 12


def _sigma_residual(mp: MatchedPair, S: np.ndarray) -> np.ndarray:
    g = np.arange(mp.nG)[:, None, None, None]
    x = np.arange(mp.nF)[None, :, None, None]
    y = np.arange(mp.nF)[None, None, :, None]
    z = np.arange(mp.nF)[None, None, None, :]
    Fm = mp.F.mult
    return S[mp.act_l[g, x], y, z] + S[g, x, Fm[y, z]] - S[g, Fm[x, y], z] - S[g, x, y]


def _tau_residual(mp: MatchedPair, T: np.ndarray) -> np.ndarray:
    x = np.arange(mp.nF)[:, None, None, None]
    g = np.arange(mp.nG)[None, :, None, None]
    h = np.arange(mp.nG)[None, None, :, None]
    k = np.arange(mp.nG)[None, None, None, :]
    Gm = mp.G.mult
    return T[x, Gm[g, h], k] + T[mp.act_r[k, x], g, h] - T[x, h, k] - T[x, g, Gm[h, k]]


def _span(basis: list[list[int]], n: int, limit: int) -> list[np.ndarray]:
    """All Z/n-combinations of ``basis``; raises if more than ``limit``."""
    dim = len(basis[0]) if basis else 0
    seen = {bytes(dim * 8): np.zeros(dim, dtype=np.int64)}
    for b in basis:
        vec = np.array(b, dtype=np.int64) % n
        if not vec.any():
            continue
        for v in list(seen.values()):
            for k in range(1, n):
                w = (v + k * vec) % n
                seen.setdefault(w.tobytes(), w)
        if len(seen) > limit:
            raise OverflowError(f"cocycle space exceeds {limit} elements")
    return list(seen.values())


def normalized_cocycles(shape: tuple[int, int, int], free: list[tuple[int, int, int]],
                        residual: Callable[[np.ndarray], np.ndarray], n: int,
                        limit: int = 200_000) -> list[np.ndarray]:
    """Tables supported on ``free`` positions whose residual vanishes mod n."""
    cols = []
    for pos in free:
        e = np.zeros(shape, dtype=np.int64)
        e[pos] = 1
        cols.append(residual(e).ravel())
    if not cols:
        return [np.zeros(shape, dtype=np.int64)]
    mat = np.stack(cols, axis=1)
    mat = mat[np.any(mat % n != 0, axis=1)]
    if mat.shape[0] == 0:
        kernel = [[1 if j == i else 0 for j in range(len(free))] for i in range(len(free))]
    else:
        rows = np.unique(mat % n, axis=0).tolist()
        _, kernel = solve_mod(rows, [0] * len(rows), n)
    out = []
    for vec in _span(kernel, n, limit):
        t = np.zeros(shape, dtype=np.int64)
        for pos, v in zip(free, vec):
            t[pos] = v
        out.append(t)
    return out


@dataclass(frozen=True, eq=False)
class SearchResult:
    datum: BicrossedDatum
    q: np.ndarray

    @property
    def braiding_trivial(self) -> bool:
        return not self.q.any()


def search_compatible_data(mp: MatchedPair, conductor: int, max_results: int = 10,
                           nontrivial_only: bool = False) -> Iterator[SearchResult]:
    """Yield normalized (σ, τ) with values in μ_N that make R braided.

    A pair qualifies when the four multiplicativity laws hold for the
    braiding computed from it and Δ is multiplicative for the twisted
    product.  Only pairs with |G|·|F| at most 12 are searched.
    """
    if mp.nG * mp.nF > MAX_ORDER_PRODUCT:
        raise ValueError(f"|G|·|F| = {mp.nG * mp.nF} exceeds {MAX_ORDER_PRODUCT}")
    n = conductor
    nG, nF = mp.nG, mp.nF
    free_s = [(g, x, y) for g in range(1, nG) for x in range(1, nF) for y in range(1, nF)]
    free_t = [(x, g, h) for x in range(1, nF) for g in range(1, nG) for h in range(1, nG)]
    sigmas = normalized_cocycles((nG, nF, nF), free_s, lambda S: _sigma_residual(mp, S), n)
    taus = normalized_cocycles((nF, nG, nG), free_t, lambda T: _tau_residual(mp, T), n)
    found = 0
    for S in sigmas:
        for T in taus:
            datum = BicrossedDatum(mp, n, S, T)
            q = compute_q(datum)
            if nontrivial_only and not q.any():
                continue
            if compatibility_residual(datum, q).any():
                continue
            if not check_q_multiplicativity(mp, q, n).passed:
                continue
            yield SearchResult(datum, q)
            found += 1
            if found >= max_results:
                return
