"""Parameterized example families of braided bicrossed products.

Each constructor returns an :class:`Example` holding the cocycle datum,
an explicit realization when one is known, and the closed-form braiding
exponents ``closed_q[g, h, x, y]`` when one is known.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .cocycles import BicrossedDatum
from .errors import BadParameters
from .fields import GaloisField, is_prime, q_number, unit_of_order
from .groups import cyclic, direct_product, generated_subgroup, make_group, symmetric_group
from .matched_pair import MatchedPair, from_factorization, from_right_action, trivial_pair
from .realization import DiagonalRealization
from .smith import AbelianGroup


@dataclass(frozen=True, eq=False)
class Example:
    name: str
    datum: BicrossedDatum
    params: dict = field(default_factory=dict)
    realization: DiagonalRealization | None = None
    closed_q: np.ndarray | None = None

    @property
    def mp(self) -> MatchedPair:
        return self.datum.mp

    @property
    def conductor(self) -> int:
        return self.datum.conductor


# ------------------------------------------------------------ trivial actions


def example_trivial_actions(p: int, a: int, b: int) -> Example:
    """G = F = F_p ⊕ F_p with both actions trivial and a quadratic σ.

    τ_{(x,y)}((α,β),(α',β')) = ζ_p^{(x+y)(αβ'-α'β)},
    σ_{(α,β)}((x,y),(x',y')) = ζ_p^{(aα²+bβ²)(xy'-x'y)}.
    Element (u, v) of F_p ⊕ F_p has index u*p + v.
    """
    if p < 3 or not is_prime(p):
        raise BadParameters(f"p = {p} must be an odd prime", (p,))
    if (a * b) % p == 0:
        raise BadParameters(f"a*b = {a * b} must be nonzero modulo {p}", (a, b))
    V = direct_product(cyclic(p), cyclic(p))
    mp = trivial_pair(V, V)
    i = np.arange(p * p)
    u, v = i // p, i % p
    # wedge[x, y] = x_1 y_2 - y_1 x_2 for vectors indexed by x, y
    wedge = u[:, None] * v[None, :] - v[:, None] * u[None, :]
    tau = (u + v)[:, None, None] * wedge[None, :, :]
    quad = a * u * u + b * v * v
    sigma = quad[:, None, None] * wedge[None, :, :]
    polar = a * u[:, None] * u[None, :] + b * v[:, None] * v[None, :]
    closed = (2 * polar[:, :, None, None] * wedge[None, None, :, :]) % p
    datum = BicrossedDatum(mp, p, sigma, tau)
    return Example("trivial-actions", datum, {"p": p, "a": a, "b": b}, closed_q=closed)


# ------------------------------------------------------------ finite fields


def finite_field_pair(p: int, q: int) -> tuple[MatchedPair, GaloisField, int]:
    """G = (F_{p²}, +), F = Z/q, g ◁ x = ν^x g with ν of order q; ▷ trivial."""
    if not is_prime(q):
        raise BadParameters(f"q = {q} must be prime", (q,))
    K = GaloisField(p)
    nu = unit_of_order(q, p)
    G = make_group(K.add_table)
    F = cyclic(q)
    perms = [[K.scale(pow(nu, x, p), g) for g in K.elements()] for x in range(q)]
    return from_right_action(F, G, perms), K, nu


def example_p4q(p: int, q: int, r: int = 1) -> Example:
    """The finite-field family realized over C = (F_{p²}, +).

    z(g,x) = g[x]_ν,  <χ(g,x), h> = ζ_p^{2 tr(hg)[x]_ν},
    σ_g(x,y) = ζ_p^{tr(g²) ν^x [x]_ν [y]_ν},
    τ_x(g,h) = ζ_p^{r [x]_{ν²} det_a(g,h)}.

    ``r`` selects the τ-cocycle within its family; ``r = 0`` gives the
    case with trivial τ.
    """
    mp, K, nu = finite_field_pair(p, q)
    nG = K.order
    qn = np.array([q_number(nu, x, p) for x in range(q)], dtype=np.int64)
    qn2 = np.array([q_number(nu * nu % p, x, p) for x in range(q)], dtype=np.int64)
    nupow = np.array([pow(nu, x, p) for x in range(q)], dtype=np.int64)
    g = np.arange(nG)
    tr = K.trace
    tr_sq = tr[K.mul_table[g, g]]
    sigma = tr_sq[:, None, None] * (nupow * qn)[None, :, None] * qn[None, None, :]
    tau = r * qn2[:, None, None] * K.det_table[None, :, :]
    trhg = tr[K.mul_table]  # trhg[h, g] = tr(hg)
    # closed_q[g, h, x, y] = 2 tr(hg) [x][y]
    closed = 2 * trhg.T[:, :, None, None] * qn[None, None, :, None] * qn[None, None, None, :]
    # realization over C = (F_p)² via coordinates (j, l)
    C = AbelianGroup((p, p))
    z = np.zeros((nG, q, 2), dtype=np.int64)
    chi = np.zeros((nG, q, 2), dtype=np.int64)
    basis = [K.one(), K.generator()]
    for gi in range(nG):
        for x in range(q):
            z[gi, x] = K.coords(K.scale(int(qn[x]), gi))
            for i, e in enumerate(basis):
                chi[gi, x, i] = 2 * int(tr[K.mul(e, gi)]) * int(qn[x])
    datum = BicrossedDatum(mp, p, sigma, tau)
    dr = DiagonalRealization(C, p, z, chi)
    return Example(
        "p4q",
        datum,
        {"p": p, "q": q, "r": r, "nu": nu, "c": K.c},
        realization=dr,
        closed_q=closed % p,
    )


def example_nicosomm(p: int, q: int) -> Example:
    """The finite-field family with trivial τ (R is k^G ⊗ kF as a coalgebra)."""
    ex = example_p4q(p, q, r=0)
    return Example("nicosomm", ex.datum, dict(ex.params), ex.realization, ex.closed_q)


def enumerate_alpha(p: int, q: int) -> list[tuple[int, ...]]:
    """All normalized 1-cocycles α: Z/q -> (F_{p²}, +) for g ◁ x = ν^x g.

    A cocycle satisfies α(x+y) = α(x) + ν^x α(y).  Candidates are
    generated from α(1) and each is then verified on all pairs.
    """
    mp, K, nu = finite_field_pair(p, q)
    out = []
    for r in K.elements():
        alpha = [0] * q
        for x in range(1, q):
            alpha[x] = K.add(alpha[x - 1], K.scale(pow(nu, x - 1, p), r))
        ok = all(
            alpha[(x + y) % q] == K.add(alpha[x], K.scale(pow(nu, x, p), alpha[y]))
            for x in range(q)
            for y in range(q)
        )
        if ok:
            out.append(tuple(alpha))
    return out


# ------------------------------------------------------------ cyclic groups


def cyclic_direct_product(n: int, m: int, omega: int, mu: int) -> Example:
    """F = <a> of order n, G = <b> of order m, trivial actions.

    ``omega`` and ``mu`` are exponents of ζ_{mn}.  With carries
    q = ⌊(j+h)/n⌋ and q̃ = ⌊(s+t)/m⌋:
    σ_{b^s}(a^j, a^h) = ω^{nqs},
    τ_{a^k}(b^s, b^t) = ζ^{st k(k-1)/2} μ^{m q̃ k},
    where ζ is a primitive gcd(m, n)-th root of unity.
    """
    if n < 1 or m < 1:
        raise BadParameters("orders must be positive", (n, m))
    d = gcd(m, n)
    if (n * (n - 1) // 2) % d:
        raise BadParameters(f"gcd(m, n) = {d} does not divide n(n-1)/2", (m, n))
    big = m * n
    zeta = big // d
    F, G = cyclic(n), cyclic(m)
    mp = trivial_pair(F, G)
    j = np.arange(n)
    s = np.arange(m)
    carry = (j[:, None] + j[None, :]) // n
    sigma = omega * n * carry[None, :, :] * s[:, None, None]
    carry_g = (s[:, None] + s[None, :]) // m
    k = j[:, None, None]
    tau = zeta * (s[:, None] * s[None, :])[None] * (k * (k - 1) // 2) + mu * m * carry_g[None] * k
    datum = BicrossedDatum(mp, big, sigma, tau)
    # realization: C = <u> of order d, z(b^h, a^j) = u^{hj}, <χ(b^h, a^j), u^l> = ζ^{hjl}
    if d > 1:
        C = AbelianGroup((d,))
        hj = (s[:, None] * j[None, :])[:, :, None]
        dr = DiagonalRealization(C, big, hj, hj)
    else:
        dr = DiagonalRealization.trivial(m, n, big)
    return Example(
        "cyclic",
        datum,
        {"N": n, "M": m, "omega": omega % big, "mu": mu % big},
        realization=dr,
    )


def kashina(n: int, sign: int = 1) -> Example:
    """M = 2, N = 2^n, ζ = -1, μ = 1; ω = 1 (sign +1) or ω = ζ_{2N} (sign -1)."""
    if n < 2:
        raise BadParameters("need n > 1", (n,))
    if sign not in (1, -1):
        raise BadParameters("sign must be +1 or -1", (sign,))
    N = 2**n
    omega = 0 if sign == 1 else 1
    ex = cyclic_direct_product(N, 2, omega, 0)
    params = dict(ex.params, n=n, sign=sign)
    return Example("kashina", ex.datum, params, ex.realization, ex.closed_q)


def example_cyclic_gauge(n: int, m: int) -> np.ndarray:
    """ν(b^s, a^j) = ω^{sj} exponent table (in units of ω), laid out [s, j]."""
    return np.arange(m)[:, None] * np.arange(n)[None, :]


# ------------------------------------------------------------ S3


def s3_pair() -> MatchedPair:
    """S₃ = <(12)> · <(123)>: ▷ trivial, ◁ conjugation."""
    S3 = symmetric_group(3)
    labels = S3.labels
    transposition = labels.index("(12)")
    three_cycle = labels.index("(123)")
    f_elems = [0, transposition]
    g_elems = [0, three_cycle, S3.mul(three_cycle, three_cycle)]
    return from_factorization(S3, f_elems, g_elems)


def s4_pair(reverse: bool = False) -> MatchedPair:
    """S₄ = S₃ · <(1234)> with F = S₃ (or F = C₄ when ``reverse``); both actions nontrivial."""
    S4 = symmetric_group(4)
    labels = S4.labels
    s3 = generated_subgroup(S4, [labels.index("(12)"), labels.index("(123)")])
    c4 = generated_subgroup(S4, [labels.index("(1234)")])
    return from_factorization(S4, c4, s3) if reverse else from_factorization(S4, s3, c4)


def example_s3(conductor: int = 1) -> Example:
    """The S₃ matched pair with trivial cocycles."""
    mp = s3_pair()
    return Example("s3", BicrossedDatum.trivial(mp, conductor), {})
