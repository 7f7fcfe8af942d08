from __future__ import annotations

import numpy as np
import pytest

from braided_bicrossed import families
from braided_bicrossed.braiding import check_theorem_conditions, compute_q
from braided_bicrossed.errors import BadParameters

from .oracles import brute_q, sigma_law_holds, tau_law_holds


@pytest.mark.parametrize("p,a,b", [(3, 1, 1), (3, 1, 2), (5, 2, 3)])
def test_trivial_actions_tables_and_braiding(p, a, b):
    ex = families.example_trivial_actions(p, a, b)
    S, T = ex.datum.sigma, ex.datum.tau
    for g in range(p * p):
        al, be = divmod(g, p)
        for x in range(p * p):
            x1, x2 = divmod(x, p)
            for y in range(p * p):
                y1, y2 = divmod(y, p)
                w = x1 * y2 - y1 * x2
                assert (S[g, x, y] - (a * al * al + b * be * be) * w) % p == 0
                assert (T[g, x, y] - (al + be) * w) % p == 0  # roles: τ_{g}(x, y) with g ∈ F
    assert sigma_law_holds(ex.mp, S, p) and tau_law_holds(ex.mp, T, p)
    assert np.array_equal(compute_q(ex.datum), ex.closed_q)
    assert check_theorem_conditions(ex.datum).passed


def test_trivial_actions_closed_form_matches_the_loop_formula():
    ex = families.example_trivial_actions(5, 1, 2)
    assert np.array_equal(brute_q(ex.datum), ex.closed_q)


@pytest.mark.parametrize("p,q", [(3, 2), (5, 2), (7, 3)])
def test_finite_field_family_with_trivial_tau(p, q):
    ex = families.example_p4q(p, q, 0)
    assert not ex.datum.tau.any()
    assert ex.mp.has_trivial_left_action() and not ex.mp.has_trivial_right_action()
    assert sigma_law_holds(ex.mp, ex.datum.sigma, p)
    assert np.array_equal(compute_q(ex.datum), ex.closed_q)


@pytest.mark.parametrize("r", [1, 2])
def test_finite_field_family_tau_is_a_cocycle(r):
    for p, q in ((3, 2), (7, 3)):
        ex = families.example_p4q(p, q, r)
        assert tau_law_holds(ex.mp, ex.datum.tau, p)
        assert ex.datum.validate().passed


def test_finite_field_pair_action_has_order_q():
    mp, K, nu = families.finite_field_pair(7, 3)
    assert pow(nu, 3, 7) == 1 and nu != 1
    assert mp.nG == 49 and mp.nF == 3
    # g ◁ x is multiplication by ν^x: additive in g
    for x in range(3):
        for g in range(49):
            for h in range(49):
                assert mp.lhd(mp.G.mul(g, h), x) == mp.G.mul(mp.lhd(g, x), mp.lhd(h, x))


def test_nicosomm_is_the_trivial_tau_case():
    a, b = families.example_nicosomm(3, 2), families.example_p4q(3, 2, 0)
    assert np.array_equal(a.datum.sigma, b.datum.sigma) and not a.datum.tau.any()


def test_alpha_cocycles_by_exhaustion():
    mp, K, nu = families.finite_field_pair(3, 2)
    got = set(families.enumerate_alpha(3, 2))
    want = set()
    from itertools import product
    for alpha in product(range(9), repeat=2):
        if alpha[0] != 0:
            continue
        if all(alpha[(x + y) % 2] == mp.G.mul(alpha[x], mp.lhd(alpha[y], x)) for x in range(2) for y in range(2)):
            want.add(alpha)
    assert got == want and len(got) == 9


@pytest.mark.parametrize("n,m,omega,mu", [(3, 6, 5, 7), (4, 2, 1, 3), (3, 3, 1, 2), (5, 3, 2, 4)])
def test_cyclic_family_laws(n, m, omega, mu):
    ex = families.cyclic_direct_product(n, m, omega, mu)
    N = n * m
    assert ex.conductor == N
    assert sigma_law_holds(ex.mp, ex.datum.sigma, N) and tau_law_holds(ex.mp, ex.datum.tau, N)
    assert ex.datum.validate().passed


def test_kashina_parameters():
    plus, minus = families.kashina(3, 1), families.kashina(3, -1)
    assert plus.params["N"] == 8 and plus.params["M"] == 2
    assert plus.params["omega"] == 0 and minus.params["omega"] == 1
    assert not np.array_equal(plus.datum.sigma, minus.datum.sigma)


@pytest.mark.parametrize("call", [
    lambda: families.example_trivial_actions(4, 1, 1),
    lambda: families.example_trivial_actions(2, 1, 1),
    lambda: families.example_trivial_actions(5, 5, 1),
    lambda: families.finite_field_pair(3, 4),
    lambda: families.cyclic_direct_product(0, 2, 0, 0),
    lambda: families.cyclic_direct_product(6, 4, 0, 0),
    lambda: families.cyclic_direct_product(2, 2, 0, 1),
    lambda: families.kashina(1),
    lambda: families.kashina(2, 0),
])
def test_bad_parameters(call):
    with pytest.raises(BadParameters):
        call()


def test_s3_and_s4_pairs():
    mp = families.s3_pair()
    assert (mp.nG, mp.nF) == (3, 2)
    for rev in (False, True):
        s4 = families.s4_pair(rev)
        assert s4.nG * s4.nF == 24
        assert not s4.has_trivial_left_action() and not s4.has_trivial_right_action()
