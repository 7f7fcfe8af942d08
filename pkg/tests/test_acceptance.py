"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact (integer exponents modulo the conductor or
exact cyclotomic integers), so the only tolerances pinned here are the
wall-clock budgets.
"""

from __future__ import annotations

import time

import numpy as np

from braided_bicrossed import bicrossed as bc
from braided_bicrossed import cohomology, families, realization
from braided_bicrossed.braiding import (
    check_theorem_conditions,
    check_trivial_action_decomposition,
    compute_q,
    trivial_action_parts,
)
from braided_bicrossed.cocycles import validate_sigma, validate_tau
from braided_bicrossed.cohomology import Cochain, delta_h, delta_v
from braided_bicrossed.errors import CharacterIllDefined
from braided_bicrossed.families import finite_field_pair
from braided_bicrossed.fields import q_number
from braided_bicrossed.groups import symmetric_group
from braided_bicrossed.matched_pair import from_factorization, validate_matched_pair
from braided_bicrossed.scalars import CycInt
from braided_bicrossed.search import search_compatible_data
from braided_bicrossed.smith import AbelianGroup, smith_normal_form

from .oracles import random_coboundary_datum, random_matched_pairs

# wall-clock budgets in seconds
BUDGET_S3_PAIR = 1.0
BUDGET_TRIVIAL_ACTIONS = 30.0
BUDGET_P4Q = 5.0
BUDGET_UNIVERSAL = 10.0
BUDGET_BIPRODUCT = 60.0


def verdict(number: int, title: str, checks: dict[str, bool], elapsed: float | None = None,
            budget: float | None = None) -> None:
    if budget is not None:
        checks = dict(checks, **{f"runtime {elapsed:.2f}s < {budget:g}s": elapsed < budget})
    failed = [k for k, ok in checks.items() if not ok]
    status = "PASS" if not failed else "FAIL"
    print(f"\n[criterion {number}] {status}: {title}")
    for k, ok in checks.items():
        print(f"    {'ok  ' if ok else 'FAIL'} {k}")
    assert not failed, f"criterion {number} failed: {failed}"


def q_tuples(q: np.ndarray, closed: np.ndarray, n: int) -> bool:
    return bool(np.all((q - closed) % n == 0))


# --------------------------------------------------------------------------- 1


def test_criterion_01_matched_pair_from_s3():
    t0 = time.perf_counter()
    S3 = symmetric_group(3)
    lab = S3.labels
    c = lab.index("(123)")
    mp = from_factorization(S3, [0, lab.index("(12)")], [0, c, S3.mul(c, c)])
    rep = validate_matched_pair(mp)
    elapsed = time.perf_counter() - t0
    # g ◁ x should be x⁻¹ g x computed in S₃; recompute independently
    f_emb = [0, lab.index("(12)")]
    g_emb = [0, c, S3.mul(c, c)]
    conj = np.array([[g_emb.index(S3.prod(int(S3.inv[f]), g, f)) for f in f_emb] for g in g_emb])
    verdict(1, "S₃ = <(12)>·<(123)> gives ▷ trivial and ◁ = conjugation", {
        "▷ trivial": mp.has_trivial_left_action(),
        "◁ is conjugation g ↦ x⁻¹gx": bool(np.array_equal(mp.act_l, conj)),
        "◁ nontrivial": not mp.has_trivial_right_action(),
        f"validate passes with zero failing tuples ({sum(r.checked for r in rep.results)} checked)":
            rep.passed and all(r.failures == 0 for r in rep.results),
    }, elapsed, BUDGET_S3_PAIR)


# --------------------------------------------------------------------------- 2


def test_criterion_02_trivial_actions():
    t0 = time.perf_counter()
    ex = families.example_trivial_actions(3, 1, 1)
    d, n = ex.datum, ex.conductor
    R = bc.build_bicrossed(d)
    q = compute_q(d)
    theorem = check_theorem_conditions(d)
    bialg = bc.verify_bialgebra(R, q)
    flags = bc.commutativity_flags(R)
    _, dtau = trivial_action_parts(d)
    elapsed = time.perf_counter() - t0
    mult = [r for r in bialg.results if r.name.startswith("Δ multiplicative")]
    # (u, v) has index 3u + v
    g = h = x = 3
    y = 1
    verdict(2, "trivial actions, p = 3, a = b = 1", {
        "dim R = 81": R.dim == 81,
        "σ and τ cocycles": validate_sigma(d.mp, d.sigma, n).passed and validate_tau(d.mp, d.tau, n).passed,
        f"four theorem conditions ({sum(r.checked for r in theorem.results)} tuples)": theorem.passed
            and len(theorem.results) == 4,
        "verify_bialgebra with compute_q": bialg.passed,
        "Δ-multiplicativity swept over 81² basis pairs": bool(mult) and mult[0].checked >= 81 * 81,
        "compute_q equals the closed form on 6561 tuples": q.size == 6561 and q_tuples(q, ex.closed_q, n),
        "Q also equals ∂σ·∂τ": check_trivial_action_decomposition(d, q).passed,
        "∂τ trivial": not dtau.any(),
        "commutativity_flags = (False, False)": flags == (False, False),
        "Q^{(1,0),(0,1)}_{(1,0),(1,0)} = ζ_3²": int(q[g, h, x, y]) == 2,
    }, elapsed, BUDGET_TRIVIAL_ACTIONS)


# --------------------------------------------------------------------------- 3


def test_criterion_03_finite_field_family():
    """Checked for every τ-parameter r in F_3; r = 1 is the default dataset.

    With q = 2 the twisting root ν equals -1, so ν² = 1 and the closed
    form only holds when τ is trivial (r = 0).  For r ≠ 0 this test fails.
    Trivial τ also makes R cocommutative, so r = 0 expects (False, True).
    """
    t0 = time.perf_counter()
    checks = {}
    for r in range(3):
        ex = families.example_p4q(3, 2, r)
        d, n = ex.datum, ex.conductor
        R = bc.build_bicrossed(d)
        q = compute_q(d)
        pairing = ex.realization.pairing() % n
        checks[f"r={r}: dim R = 18"] = R.dim == 18
        checks[f"r={r}: check_braid_c_chi"] = realization.check_braid_c_chi(d, ex.realization).passed
        checks[f"r={r}: realization pairing equals compute_q"] = bool(np.array_equal(pairing, q))
        checks[f"r={r}: Q equals ζ_p^(2 tr(hg)[x][y])"] = q_tuples(q, ex.closed_q, n)
        flags = (False, r == 0)
        checks[f"r={r}: flags {flags}"] = bc.commutativity_flags(R) == flags
    elapsed = time.perf_counter() - t0
    verdict(3, "finite-field family, p = 3, q = 2", checks, elapsed, BUDGET_P4Q)


# --------------------------------------------------------------------------- 4


def both_families():
    return [families.example_trivial_actions(3, 1, 1), families.example_p4q(3, 2)]


def test_criterion_04_antipode_oracles():
    checks = {}
    for ex in both_families():
        R = bc.build_bicrossed(ex.datum)
        rep = bc.antipode_oracles(R)
        for r in rep.results:
            checks[f"{ex.name}: {r.name} ({r.checked})"] = r.passed
    verdict(4, "closed antipode = convolution inverse = square-calculus antipode", checks)


# --------------------------------------------------------------------------- 5


def test_criterion_05_corollary_and_cocycle_components():
    checks = {}
    for ex in both_families():
        cor = cohomology.verify_corollary_q(ex.datum)
        comp = cohomology.cocycle_verdicts(ex.datum)
        checks[f"{ex.name}: Q from the total differential ({cor.results[0].checked} tuples)"] = cor.passed
        checks[f"{ex.name}: p1 and p3 identically 1"] = comp.passed
    verdict(5, "braiding from the total differential", checks)


# --------------------------------------------------------------------------- 6


def passing_data():
    """Data that pass the theorem checks, for the no-CharacterIllDefined sweep."""
    rng = np.random.default_rng(6)
    out = [families.example_trivial_actions(3, 1, 1).datum, families.example_trivial_actions(3, 2, 1).datum]
    out += [families.example_p4q(3, 2, r).datum for r in range(3)]
    out += [families.example_p4q(7, 3, r).datum for r in range(3)]
    out += [random_coboundary_datum(mp, 4, rng) for mp in random_matched_pairs()]
    out += [families.kashina(2, 1).datum, families.kashina(2, -1).datum, families.example_s3(2).datum]
    out += [families.cyclic_direct_product(4, 2, 1, 3).datum]
    out += [res.datum for res in search_compatible_data(families.s3_pair(), 2, max_results=8)]
    return [d for d in out if check_theorem_conditions(d).passed]


def test_criterion_06_universal_realization():
    t0 = time.perf_counter()
    ex = families.example_trivial_actions(3, 1, 1)
    q = compute_q(ex.datum)
    dr = realization.universal_realization(ex.datum, orientation="transposed")
    P = dr.pairing()  # P[g, h, x, y] = <χ(h,y), z(g,x)>
    transposed_pairing = P.transpose(1, 0, 3, 2)  # <χ(g,x), z(h,y)>
    valid = realization.validate_realization(ex.mp, dr).passed
    elapsed = time.perf_counter() - t0
    ill_defined = []
    data = passing_data()
    for d in data:
        for orientation in ("transposed", "braiding"):
            try:
                realization.universal_realization(d, orientation)
            except CharacterIllDefined:
                ill_defined.append((d, orientation))
    verdict(6, "universal realization on the trivial-actions example", {
        f"C finite abelian, invariant factors {list(dr.C.factors)}": dr.C.order > 1,
        "z and χ satisfy the realization laws": valid,
        "<χ(g,x), z(h,y)> = Q^{x,y}_{g,h} on all 6561 tuples": q_tuples(transposed_pairing, q, dr.conductor),
        f"CharacterIllDefined never raised on {len(data)} passing data": not ill_defined,
    }, elapsed, BUDGET_UNIVERSAL)


# --------------------------------------------------------------------------- 7


def test_criterion_07_biproduct():
    """r = 1 uses the universal realization (|C| = 9); r = 0 the closed-form one."""
    t0 = time.perf_counter()
    checks = {}
    for r in (1, 0):
        ex = families.example_p4q(3, 2, r)
        R = bc.build_bicrossed(ex.datum)
        dr = realization.universal_realization(ex.datum) if r else ex.realization
        B = realization.build_biproduct(R, dr)
        rep = realization.verify_biproduct(B)
        checks[f"r={r}: |C| = 9"] = dr.C.order == 9
        checks[f"r={r}: dim R#kC = 162"] = B.dim == 162
        hopf_axioms = [x for x in rep.results if "→" not in x.name]
        maps = [x for x in rep.results if "→" in x.name]
        checks[f"r={r}: Hopf axioms ({len(hopf_axioms)} checks)"] = all(x.passed for x in hopf_axioms)
        checks[f"r={r}: four canonical maps and both exact sequences ({len(maps)} checks)"] = (
            len(B.canonical_maps()) == 4 and all(x.passed for x in maps))
    elapsed = time.perf_counter() - t0
    verdict(7, "biproduct for the finite-field family", checks, elapsed, BUDGET_BIPRODUCT)


# --------------------------------------------------------------------------- 8


def test_criterion_08_cyclic_equivalence():
    n, m = 4, 2
    checks = {}
    nu_shape = families.example_cyclic_gauge(n, m)
    for omega in range(n * m):
        for mu in range(n * m):
            left = families.cyclic_direct_product(n, m, omega, mu).datum
            right = families.cyclic_direct_product(n, m, 0, omega + mu).datum
            nu = omega * nu_shape
            sols = cohomology.solve_equivalence(left, right)
            found = sols is not None and sols.contains(nu)
            theta = bc.theta_equivalence(bc.build_bicrossed(left), bc.build_bicrossed(right), nu).passed
            checks[f"ω=ζ^{omega}, μ=ζ^{mu}"] = found and theta
    verdict(8, "(ω, μ) ~ (1, ωμ) via ν(b^s, a^j) = ω^{sj}, M = 2, N = 4", checks)


# --------------------------------------------------------------------------- 9


def test_criterion_09_exhaustive_enumerations():
    p, q = 3, 2
    mp, K, nu = finite_field_pair(p, q)
    alphas = set(families.enumerate_alpha(p, q))
    expected = {tuple(K.scale(q_number(nu, x, p), r) for x in range(q)) for r in K.elements()}
    zs = realization.enumerate_semidirect_z(mp, AbelianGroup((2,)))
    verdict(9, "1-cocycles α and semidirect z", {
        "enumerate_alpha(3, 2) has 9 elements": len(alphas) == 9,
        "they are exactly r·[x]_ν": alphas == expected,
        "|G| = 9": mp.nG == 9,
        "only the trivial z into Z/2": len(zs) == 1 and not np.any(zs[0]),
    })


# -------------------------------------------------------------------------- 10

PAIRS = random_matched_pairs()


def test_criterion_10_property_suites():
    rng = np.random.default_rng(20261016)
    # δ² = δ'² = 1 on (1,1)-cochains
    complex_ok, complex_n = True, 0
    for i in range(120):
        mp = PAIRS[i % len(PAIRS)]
        n = int(rng.integers(2, 9))
        f = Cochain((1, 1), rng.integers(0, n, size=(mp.nG, mp.nF)), n)
        complex_ok &= not delta_h(mp, delta_h(mp, f)).table.any()
        complex_ok &= not delta_v(mp, delta_v(mp, f)).table.any()
        complex_n += 1
    # SNF reconstruction
    snf_ok, snf_n = True, 0
    for _ in range(150):
        r, c = (int(v) for v in rng.integers(1, 9, size=2))
        M = rng.integers(-20, 21, size=(r, c))
        s = smith_normal_form(M.tolist())
        D = np.array(s.U.dot(np.array(M, dtype=object)).dot(s.V), dtype=object)
        diag = s.diagonal
        off = [(i, j) for i in range(r) for j in range(c) if i != j and D[i, j] != 0]
        chain = all(diag[k + 1] % diag[k] == 0 for k in range(len(diag) - 1) if diag[k] != 0)
        zeros_last = all(diag[k + 1] == 0 for k in range(len(diag) - 1) if diag[k] == 0)
        snf_ok &= bool((D == s.D).all()) and not off and chain and zeros_last and all(d >= 0 for d in diag)
        snf_n += 1
    # Σ_k ζ_N^k = 0
    roots_ok = True
    for N in range(2, 25):
        total = CycInt.zero(N)
        for k in range(N):
            total = total + CycInt.root(N, k)
        roots_ok &= total.is_zero()
    # braided adjoint closed form on every (δ_g x, δ_h 1)
    R = bc.build_bicrossed(families.example_s3().datum)
    adj_bad = []
    for g in range(R.mp.nG):
        for x in range(R.mp.nF):
            for h in range(R.mp.nG):
                if bc.braided_adjoint(R, R.index(g, x), R.index(h, 0)) != bc.braided_adjoint_closed(R, g, x, h):
                    adj_bad.append((g, x, h))
    verdict(10, "property suites", {
        f"δ² = δ'² = 1 on {complex_n} random cochains, conductor ≤ 8": complex_ok and complex_n >= 100,
        f"U·M·V = D on {snf_n} random matrices up to 8×8": snf_ok and snf_n >= 100,
        "Σ_k ζ_N^k = 0 for 2 ≤ N ≤ 24": roots_ok,
        f"braided adjoint closed form on all {R.dim * R.mp.nG} basis pairs of the S₃ example": not adj_bad,
    })
