from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from braided_bicrossed import families
from braided_bicrossed.cocycles import BicrossedDatum, is_sigma_coboundary, validate_sigma, validate_tau
from braided_bicrossed.errors import CocycleFails, NormalizationFails
from braided_bicrossed.groups import cyclic
from braided_bicrossed.matched_pair import trivial_pair

from .oracles import random_coboundary_datum, random_matched_pairs, sigma_law_holds, tau_law_holds

PAIRS = random_matched_pairs()[:5]


@given(st.sampled_from(PAIRS), st.integers(2, 8), st.integers(0, 2**32 - 1))
def test_coboundaries_are_cocycles(mp, n, seed):
    d = random_coboundary_datum(mp, n, np.random.default_rng(seed))
    assert d.validate().passed
    assert sigma_law_holds(mp, d.sigma, n) and tau_law_holds(mp, d.tau, n)


@given(st.sampled_from(PAIRS), st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_verdict_agrees_with_loop_oracle_on_random_tables(mp, n, seed):
    rng = np.random.default_rng(seed)
    d = random_coboundary_datum(mp, n, rng)
    S = d.sigma.copy()
    T = d.tau.copy()
    # perturb one interior entry of each; normalization is kept
    if mp.nG > 1 and mp.nF > 1:
        S[rng.integers(1, mp.nG), rng.integers(1, mp.nF), rng.integers(1, mp.nF)] += rng.integers(0, n)
        T[rng.integers(1, mp.nF), rng.integers(1, mp.nG), rng.integers(1, mp.nG)] += rng.integers(0, n)
    S %= n
    T %= n
    sig = validate_sigma(mp, S, n)
    tau = validate_tau(mp, T, n)
    assert sig["cocycle"].passed == sigma_law_holds(mp, S, n)
    assert tau["cocycle"].passed == tau_law_holds(mp, T, n)


def test_mutations_are_detected_with_the_right_errors():
    ex = families.example_trivial_actions(3, 1, 1)
    d = ex.datum
    S = d.sigma.copy()
    S[1, 1, 2] = (S[1, 1, 2] + 1) % 3
    rep = validate_sigma(d.mp, S, 3)
    assert not rep["cocycle"].passed
    with pytest.raises(CocycleFails):
        rep.raise_on_failure()
    T = d.tau.copy()
    T[1, 0, 1] = 1
    rep = validate_tau(d.mp, T, 3)
    assert not rep["normalized: τ_x(g,1) = τ_x(1,g) = 1"].passed
    with pytest.raises((CocycleFails, NormalizationFails)):
        rep.raise_on_failure()


def test_family_cocycles_validate():
    for ex in (families.example_trivial_actions(5, 2, 3), families.example_p4q(5, 2), families.example_p4q(7, 3),
               families.kashina(3, -1), families.cyclic_direct_product(3, 6, 5, 7)):
        assert ex.datum.validate().passed, ex.name


def test_with_conductor_rescales():
    d = families.example_trivial_actions(3, 1, 1).datum
    d6 = d.with_conductor(6)
    assert d6.conductor == 6 and np.array_equal(d6.sigma, 2 * d.sigma)
    with pytest.raises(ValueError):
        d.with_conductor(4)
    with pytest.raises(ValueError):
        BicrossedDatum(d.mp, 3, d.sigma[:1], d.tau)


def test_coboundary_search():
    mp = families.s3_pair()
    rng = np.random.default_rng(5)
    d = random_coboundary_datum(mp, 6, rng)
    f = is_sigma_coboundary(mp, d.sigma, 6)
    assert f is not None
    # σ_b(a,a) = -1 on C2 x C2 needs a square root of -1 to trivialize
    mp = trivial_pair(cyclic(2), cyclic(2))
    S = np.zeros((2, 2, 2), dtype=np.int64)
    S[1, 1, 1] = 1
    assert validate_sigma(mp, S, 2).passed
    assert is_sigma_coboundary(mp, S, 2) is None
    f = is_sigma_coboundary(mp, S, 2, multiplier=2)
    assert f is not None and (2 * f[1, 1]) % 4 == 2
