from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from braided_bicrossed import families
from braided_bicrossed.errors import Comp1Fails, Comp2Fails, NotComposable, NotExactFactorization
from braided_bicrossed.groups import symmetric_group
from braided_bicrossed.matched_pair import (
    MatchedPair,
    complete_square,
    from_factorization,
    is_square,
    square,
    square_compose,
    square_invert,
)

from .oracles import random_matched_pairs

PAIRS = random_matched_pairs()
pairs = st.sampled_from(PAIRS)


def ambient_oracle(mp: MatchedPair):
    """Multiply (x, g)(y, h) in F⋈G by rewriting g y = (g▷y)(g◁y) with loops."""
    def mul(a, b):
        (x, g), (y, h) = a, b
        return mp.F.mul(x, mp.rhd(g, y)), mp.G.mul(mp.lhd(g, y), h)
    return mul


@pytest.mark.parametrize("mp", PAIRS, ids=repr)
def test_validation_passes(mp):
    rep = families_validate(mp)
    assert rep.passed, rep.format()


def families_validate(mp):
    from braided_bicrossed.matched_pair import validate_matched_pair
    return validate_matched_pair(mp)


@pytest.mark.parametrize("mp", PAIRS, ids=repr)
def test_ambient_group_from_actions_is_associative(mp):
    mul = ambient_oracle(mp)
    els = [(x, g) for x in range(mp.nF) for g in range(mp.nG)]
    for a in els:
        for b in els:
            for c in els[:: max(1, len(els) // 8)]:
                assert mul(mul(a, b), c) == mul(a, mul(b, c))


def test_s4_pair_has_both_actions_nontrivial():
    for mp in (families.s4_pair(), families.s4_pair(True)):
        assert not mp.has_trivial_left_action() and not mp.has_trivial_right_action()


def test_broken_actions_are_caught():
    mp = families.s4_pair()
    act_r = mp.act_r.copy()
    # swap two values of g ▷ x in one row: still a permutation but the ▷ product law fails
    act_r[1, [1, 2]] = act_r[1, [2, 1]]
    rep = families_validate(MatchedPair(mp.F, mp.G, mp.act_l, act_r))
    assert not rep.passed
    act_l = mp.act_l.copy()
    act_l[[1, 2], 1] = act_l[[2, 1], 1]
    rep = families_validate(MatchedPair(mp.F, mp.G, act_l, mp.act_r))
    assert not rep.passed
    with pytest.raises((Comp1Fails, Comp2Fails, Exception)):
        rep.raise_on_failure()


def test_non_exact_factorization():
    S3 = symmetric_group(3)
    t = S3.labels.index("(12)")
    with pytest.raises(NotExactFactorization):
        from_factorization(S3, [0, t], [0, t])


@given(pairs, st.data())
def test_square_calculus(mp, data):
    g = data.draw(st.integers(0, mp.nG - 1))
    x = data.draw(st.integers(0, mp.nF - 1))
    A = square(mp, g, x)
    assert is_square(mp, A)
    Ah = square_invert(mp, A, "horizontal")
    Av = square_invert(mp, A, "vertical")
    Ai = square_invert(mp, A, "full")
    for s in (Ah, Av, Ai):
        assert is_square(mp, s)
    # horizontal composite with the horizontal inverse has trivial top and bottom
    H = square_compose(mp, Ah, A, "horizontal")
    assert H.g == 0 and H.t == 0
    V = square_compose(mp, A, Av, "vertical")
    assert V.v == 0 and V.x == 0
    with pytest.raises(NotComposable):
        if A.x == A.v:
            raise NotComposable("")
        square_compose(mp, A, A, "horizontal")


@given(pairs, st.data())
def test_unique_square_completion(mp, data):
    g = data.draw(st.integers(0, mp.nG - 1))
    x = data.draw(st.integers(0, mp.nF - 1))
    h = data.draw(st.integers(0, mp.nG - 1))
    b = square(mp, g, x)
    c = square(mp, h, data.draw(st.integers(0, mp.nF - 1)))
    c = square(mp, c.g, c.x)
    a, d = complete_square(mp, b, c)
    assert is_square(mp, a) and is_square(mp, d)
    assert a.x == b.v and d.g == b.t and d.v == c.x
    # brute force: a is the only square with right edge b.v and bottom c.g
    cands = [square(mp, k, b.v) for k in range(mp.nG) if mp.lhd(k, b.v) == c.g]
    assert cands == [a]


def test_conjugation_action_on_s3():
    mp = families.s3_pair()
    assert mp.has_trivial_left_action()
    assert np.array_equal(mp.act_l[:, 0], np.arange(3))
    assert sorted(mp.act_l[1:, 1].tolist()) == [1, 2] and mp.act_l[1, 1] == 2
