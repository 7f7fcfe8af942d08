"""Independent brute-force oracles shared by the test modules.

Everything here is written with plain loops or dense complex matrices so
that it shares no code path with the vectorized exponent tables of the
package.  Float comparisons use ``ATOL``.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

import numpy as np

from braided_bicrossed import families
from braided_bicrossed.cocycles import BicrossedDatum, sigma_coboundary, tau_coboundary
from braided_bicrossed.groups import cyclic, symmetric_group
from braided_bicrossed.matched_pair import MatchedPair, from_factorization, trivial_pair

ATOL = 1e-9


@lru_cache(maxsize=None)
def _pairs() -> tuple[MatchedPair, ...]:
    S3 = symmetric_group(3)
    lab = S3.labels
    c = lab.index("(123)")
    reversed_s3 = from_factorization(S3, [0, c, S3.mul(c, c)], [0, lab.index("(12)")])
    return (
        families.s3_pair(),
        reversed_s3,
        trivial_pair(cyclic(2), cyclic(3)),
        trivial_pair(cyclic(4), cyclic(2)),
        families.finite_field_pair(3, 2)[0],
        families.s4_pair(),
        families.s4_pair(reverse=True),
    )


def random_matched_pairs() -> list[MatchedPair]:
    """Small matched pairs covering trivial, one-sided and two-sided actions."""
    return list(_pairs())


def random_coboundary_datum(mp: MatchedPair, n: int, rng: np.random.Generator) -> BicrossedDatum:
    """A datum whose σ and τ are coboundaries of random normalized 1-cochains."""
    fs = rng.integers(0, n, size=(mp.nG, mp.nF))
    ft = rng.integers(0, n, size=(mp.nG, mp.nF))
    for f in (fs, ft):
        f[0] = 0
        f[:, 0] = 0
    return BicrossedDatum(mp, n, sigma_coboundary(mp, fs, n), tau_coboundary(mp, ft, n))


# ------------------------------------------------------------------ scalar laws


def sigma_law_holds(mp: MatchedPair, sigma, n: int) -> bool:
    """σ_{g◁x}(y,z) σ_g(x,yz) = σ_g(xy,z) σ_g(x,y), checked with loops."""
    for g in range(mp.nG):
        for x in range(mp.nF):
            for y in range(mp.nF):
                for z in range(mp.nF):
                    lhs = sigma[mp.lhd(g, x)][y][z] + sigma[g][x][mp.F.mul(y, z)]
                    rhs = sigma[g][mp.F.mul(x, y)][z] + sigma[g][x][y]
                    if (lhs - rhs) % n:
                        return False
    return True


def tau_law_holds(mp: MatchedPair, tau, n: int) -> bool:
    """τ_x(gh,k) τ_{k▷x}(g,h) = τ_x(h,k) τ_x(g,hk), checked with loops."""
    for x in range(mp.nF):
        for g in range(mp.nG):
            for h in range(mp.nG):
                for k in range(mp.nG):
                    lhs = tau[x][mp.G.mul(g, h)][k] + tau[mp.rhd(k, x)][g][h]
                    rhs = tau[x][h][k] + tau[x][g][mp.G.mul(h, k)]
                    if (lhs - rhs) % n:
                        return False
    return True


def brute_q(datum: BicrossedDatum) -> np.ndarray:
    """Q[g,h,x,y] one entry at a time from σ, τ and the actions."""
    mp, n = datum.mp, datum.conductor
    S, T = datum.sigma, datum.tau
    G, F = mp.G, mp.F
    out = np.zeros((mp.nG, mp.nG, mp.nF, mp.nF), dtype=np.int64)
    for g in range(mp.nG):
        for x in range(mp.nF):
            gx, gl = mp.rhd(g, x), mp.lhd(g, x)
            for h in range(mp.nG):
                w = mp.lhd(h, int(F.inv[gx]))
                for y in range(mp.nF):
                    yp = mp.rhd(int(G.inv[gl]), y)
                    e = (S[G.mul(w, g), x, yp] - S[w, gx, y] - S[g, x, yp]
                         + T[F.mul(x, yp), w, g] - T[yp, h, gl] - T[x, w, g])
                    out[g, h, x, y] = e % n
    return out


def brute_multiplicativity(mp: MatchedPair, q: np.ndarray, n: int) -> list[np.ndarray]:
    """The four multiplicativity residuals of Q, axes (g,s,x,y,z) then (g,s,t,x,y)."""
    nG, nF = mp.nG, mp.nF
    G, F = mp.G, mp.F
    m1 = np.zeros((nG, nG, nF, nF, nF), dtype=np.int64)
    m2 = np.zeros_like(m1)
    for g in range(nG):
        for s in range(nG):
            for x in range(nF):
                for y in range(nF):
                    for z in range(nF):
                        m1[g, s, x, y, z] = q[g, s, x, F.mul(y, z)] - q[g, s, x, y] - q[g, mp.lhd(s, y), x, z]
                        m2[g, s, x, y, z] = q[g, s, F.mul(x, y), z] - q[g, s, x, z] - q[mp.lhd(g, x), s, y, z]
    m3 = np.zeros((nG, nG, nG, nF, nF), dtype=np.int64)
    m4 = np.zeros_like(m3)
    for g in range(nG):
        for s in range(nG):
            for t in range(nG):
                for x in range(nF):
                    for y in range(nF):
                        m3[g, s, t, x, y] = q[g, G.mul(t, s), x, y] - q[g, t, x, mp.rhd(s, y)] - q[g, s, x, y]
                        m4[g, s, t, x, y] = q[G.mul(g, t), s, x, y] - q[g, s, mp.rhd(t, x), y] - q[t, s, x, y]
    return [m % n for m in (m1, m2, m3, m4)]


# ------------------------------------------------------------------ dense algebra


class DenseHopf:
    """Structure tensors of R as complex arrays, built from the defining formulas."""

    def __init__(self, datum: BicrossedDatum, q: np.ndarray | None = None):
        mp, n = datum.mp, datum.conductor
        G, F = mp.G, mp.F
        S, T = datum.sigma, datum.tau
        nG, nF = mp.nG, mp.nF
        d = nG * nF
        self.dim = d
        z = [cmath.exp(2j * cmath.pi * k / n) for k in range(n)]

        def idx(g, x):
            return g * nF + x

        self.m = np.zeros((d, d, d), dtype=complex)
        self.delta = np.zeros((d, d, d), dtype=complex)
        self.S = np.zeros((d, d), dtype=complex)
        self.eps = np.zeros(d, dtype=complex)
        self.unit = np.zeros(d, dtype=complex)
        self.eps[[idx(0, x) for x in range(nF)]] = 1
        for g in range(nG):
            self.unit[idx(g, 0)] = 1
            for x in range(nF):
                a = idx(g, x)
                for y in range(nF):
                    h = mp.lhd(g, x)
                    self.m[a, idx(h, y), idx(g, F.mul(x, y))] += z[S[g, x, y] % n]
                for t in range(nG):
                    s = G.mul(int(G.inv[t]), g)
                    self.delta[a, idx(t, mp.rhd(s, x)), idx(s, x)] += z[T[x, t, s] % n]
                v, tl = mp.rhd(g, x), mp.lhd(g, x)
                ti, vi = int(G.inv[tl]), int(F.inv[v])
                self.S[a, idx(ti, vi)] = z[(-S[ti, vi, v] - T[x, int(G.inv[g]), g]) % n]
        self.c = None
        if q is not None:
            self.c = np.zeros((d, d, d, d), dtype=complex)  # c[a, b, b', a']
            for g in range(nG):
                for x in range(nF):
                    for h in range(nG):
                        for y in range(nF):
                            self.c[idx(g, x), idx(h, y), idx(h, y), idx(g, x)] = z[q[g, h, x, y] % n]

    def associativity_error(self) -> float:
        left = np.einsum("abk,kcd->abcd", self.m, self.m, optimize=True)
        right = np.einsum("bck,akd->abcd", self.m, self.m, optimize=True)
        return float(np.abs(left - right).max())

    def coassociativity_error(self) -> float:
        left = np.einsum("akc,kbd->abdc", self.delta, self.delta, optimize=True)  # (Δ⊗id)Δ
        right = np.einsum("abk,kcd->abcd", self.delta, self.delta, optimize=True)  # (id⊗Δ)Δ
        return float(np.abs(left - right).max())

    def counit_error(self) -> float:
        eye = np.eye(self.dim)
        left = np.einsum("abc,b->ac", self.delta, self.eps, optimize=True)
        right = np.einsum("abc,c->ab", self.delta, self.eps, optimize=True)
        return float(max(np.abs(left - eye).max(), np.abs(right - eye).max()))

    def antipode_error(self) -> float:
        target = np.outer(self.eps, self.unit)
        left = np.einsum("abc,bd,dce->ae", self.delta, self.S, self.m, optimize=True)
        right = np.einsum("abc,cd,bde->ae", self.delta, self.S, self.m, optimize=True)
        return float(max(np.abs(left - target).max(), np.abs(right - target).max()))

    def braided_multiplicativity_error(self) -> float:
        """Δ(ab) against (m⊗m)(id⊗c⊗id)(Δa⊗Δb); flip when no braiding is set."""
        d = self.dim
        c = self.c
        if c is None:
            c = np.zeros((d, d, d, d), dtype=complex)
            for a in range(d):
                for b in range(d):
                    c[a, b, b, a] = 1
        lhs = np.einsum("abk,kcd->abcd", self.m, self.delta, optimize=True)
        # a -> a1⊗a2, b -> b1⊗b2, c(a2⊗b1) = b1'⊗a2', then (a1 b1')⊗(a2' b2)
        rhs = np.einsum("aij,bkl,jkmn,imc,nld->abcd", self.delta, self.delta, c, self.m, self.m, optimize=True)
        return float(np.abs(lhs - rhs).max())

    def braid_equation_error(self) -> float:
        if self.c is None:
            return 0.0
        return _braid_residual(self.c)


def _braid_residual(c: np.ndarray) -> float:
    """(c⊗id)(id⊗c)(c⊗id) - (id⊗c)(c⊗id)(id⊗c) on every basis triple.

    c must send each basis pair to a multiple of one basis pair, which is
    asserted; the two composites are then followed pair by pair.
    """
    d = c.shape[0]
    flat = c.reshape(d * d, d * d)
    assert np.all(np.count_nonzero(flat, axis=1) == 1)
    target = np.argmax(flat != 0, axis=1)
    coeff = flat[np.arange(d * d), target]

    def apply(word, pos):
        (i, j, k), z = word
        if pos == 0:
            t = target[i * d + j]
            return (t // d, t % d, k), z * coeff[i * d + j]
        t = target[j * d + k]
        return (i, t // d, t % d), z * coeff[j * d + k]

    worst = 0.0
    for a in range(d):
        for b in range(d):
            for e in range(d):
                left = apply(apply(apply(((a, b, e), 1), 0), 1), 0)
                right = apply(apply(apply(((a, b, e), 1), 1), 0), 1)
                if left[0] != right[0]:
                    return float("inf")
                worst = max(worst, abs(left[1] - right[1]))
    return worst
