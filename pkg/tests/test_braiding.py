from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braided_bicrossed import bicrossed as bc
from braided_bicrossed import families
from braided_bicrossed.braiding import (
    antipode_invariance,
    check_compatibility,
    check_q_multiplicativity,
    check_theorem_conditions,
    check_trivial_action_decomposition,
    compatibility_residual,
    compute_q,
    symmetrization_order,
    theorem_condition_residuals,
    trivial_action_parts,
)
from braided_bicrossed.cocycles import BicrossedDatum
from braided_bicrossed.groups import cyclic, symmetric_group
from braided_bicrossed.matched_pair import trivial_pair
from braided_bicrossed.search import search_compatible_data

from .oracles import ATOL, DenseHopf, brute_multiplicativity, brute_q, random_coboundary_datum, random_matched_pairs

PAIRS = random_matched_pairs()
SMALL = [mp for mp in PAIRS if mp.nG * mp.nF <= 18]


def family_data():
    return [
        families.example_trivial_actions(3, 1, 1),
        families.example_trivial_actions(5, 2, 1),
        families.example_p4q(3, 2, 0),
        families.example_p4q(5, 2, 0),
        families.example_p4q(7, 3, 1),
        families.kashina(2, 1),
        families.kashina(3, -1),
        families.cyclic_direct_product(3, 6, 5, 7),
        families.example_s3(3),
    ]


@given(st.sampled_from(PAIRS), st.integers(2, 8), st.integers(0, 2**32 - 1))
@settings(max_examples=40)
def test_compute_q_matches_loop_oracle(mp, n, seed):
    d = random_coboundary_datum(mp, n, np.random.default_rng(seed))
    assert np.array_equal(compute_q(d), brute_q(d))


@pytest.mark.parametrize("ex", family_data(), ids=lambda e: f"{e.name}{e.params}")
def test_family_braidings_satisfy_all_laws(ex):
    d = ex.datum
    q = compute_q(d)
    assert np.array_equal(q, brute_q(d))
    assert check_theorem_conditions(d).passed
    assert check_q_multiplicativity(d.mp, q, d.conductor).passed
    assert check_compatibility(d, q).passed
    assert antipode_invariance(d, q).passed
    if ex.closed_q is not None:
        assert np.array_equal(q, ex.closed_q % d.conductor)


@given(st.sampled_from(PAIRS), st.integers(2, 6), st.integers(0, 2**32 - 1))
@settings(max_examples=30)
def test_theorem_conditions_equal_q_multiplicativity(mp, n, seed):
    """On cocycle data the four condition residuals are the four multiplicativity laws of Q."""
    d = random_coboundary_datum(mp, n, np.random.default_rng(seed))
    res = theorem_condition_residuals(d)
    oracle = brute_multiplicativity(mp, compute_q(d), n)
    for key, m in zip(sorted(res), oracle):
        assert np.array_equal(res[key] % n, m), key


def test_shortcut_subscripts_break_conditions_one_and_four():
    ex = families.example_p4q(7, 3, 1)
    assert check_theorem_conditions(ex.datum).passed
    shortcut = check_theorem_conditions(ex.datum, shortcut_subscripts=True)
    assert not shortcut["condition 1"].passed
    d = random_coboundary_datum(families.s4_pair(), 4, np.random.default_rng(0))
    exact = theorem_condition_residuals(d)
    short = theorem_condition_residuals(d, shortcut_subscripts=True)
    oracle = brute_multiplicativity(d.mp, compute_q(d), 4)
    assert np.array_equal(exact["condition 4"] % 4, oracle[3])
    assert not np.array_equal(short["condition 4"] % 4, oracle[3])


@given(st.sampled_from(SMALL), st.integers(2, 4), st.integers(0, 2**32 - 1))
@settings(max_examples=15)
def test_compatibility_verdict_matches_dense_oracle(mp, n, seed):
    d = random_coboundary_datum(mp, n, np.random.default_rng(seed))
    q = compute_q(d)
    residual_free = not (compatibility_residual(d, q) % n).any()
    err = DenseHopf(d, q).braided_multiplicativity_error()
    assert residual_free == (err < ATOL)


def test_compatibility_on_search_results_matches_dense_oracle():
    for res in search_compatible_data(families.s3_pair(), 3, max_results=6):
        assert DenseHopf(res.datum, res.q).braided_multiplicativity_error() < ATOL


@pytest.mark.parametrize("F,G", [(symmetric_group(3), cyclic(4)), (cyclic(4), symmetric_group(3)),
                                 (cyclic(3), cyclic(3))])
def test_trivial_action_decomposition(F, G):
    mp = trivial_pair(F, G)
    rng = np.random.default_rng(11)
    for n in (2, 3, 6):
        d = random_coboundary_datum(mp, n, rng)
        assert check_trivial_action_decomposition(d).passed
        dsigma, dtau = trivial_action_parts(d)
        assert dsigma.shape == dtau.shape == (G.order, G.order, F.order, F.order)


def test_trivial_action_parts_requires_trivial_actions():
    d = BicrossedDatum.trivial(families.s3_pair(), 2)
    with pytest.raises(ValueError):
        trivial_action_parts(d)


def test_symmetrization_order():
    # polar form symmetric, wedge antisymmetric: c² = id
    q = compute_q(families.example_trivial_actions(3, 1, 1).datum)
    assert symmetrization_order(q, 3) == 1
    for p, qq in ((3, 2), (7, 3)):
        assert symmetrization_order(compute_q(families.example_p4q(p, qq).datum), p) == p
    assert symmetrization_order(np.zeros_like(q), 3) == 1


def test_trivial_data_give_the_flip():
    for mp in PAIRS:
        q = compute_q(BicrossedDatum.trivial(mp, 5))
        assert not q.any()
        R = bc.build_bicrossed(BicrossedDatum.trivial(mp, 5))
        assert bc.verify_bialgebra(R).passed
