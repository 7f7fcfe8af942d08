from __future__ import annotations

import cmath

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braided_bicrossed.errors import ConductorMismatch, NotDivisible
from braided_bicrossed.scalars import (
    CycInt,
    RootOfUnity,
    cyclotomic_polynomial,
    rescale_conductor,
    totient,
)

ATOL = 1e-8
conductors = st.integers(1, 30)


def small_cycint(n: int):
    return st.lists(st.tuples(st.integers(-3, 3), st.integers(0, n - 1)), max_size=5).map(
        lambda terms: sum((CycInt.root(n, e) * k for k, e in terms), CycInt.zero(n)))


@given(st.data())
def test_ring_operations_match_complex_values(data):
    n = data.draw(conductors)
    a = data.draw(small_cycint(n))
    b = data.draw(small_cycint(n))
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < ATOL
    assert abs((a - b).to_complex() - (a.to_complex() - b.to_complex())) < ATOL
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < ATOL


@given(st.data())
def test_equality_is_equality_of_complex_numbers(data):
    n = data.draw(st.integers(1, 16))
    a = data.draw(small_cycint(n))
    b = data.draw(small_cycint(n))
    assert (a == b) == (abs(a.to_complex() - b.to_complex()) < ATOL)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_polynomial_degree_and_roots(n):
    coeffs = cyclotomic_polynomial(n)
    assert len(coeffs) - 1 == totient(n)
    z = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * z**i for i, c in enumerate(coeffs))) < 1e-6


@pytest.mark.parametrize("n", range(2, 25))
def test_full_sum_of_roots_vanishes(n):
    total = CycInt.zero(n)
    for k in range(n):
        total = total + CycInt.root(n, k)
    assert total.is_zero()


@given(conductors, st.integers(-100, 100))
def test_unit_form_recovers_the_root(n, e):
    sign, exp = CycInt.root(n, e).unit_form()
    assert abs(sign * cmath.exp(2j * cmath.pi * exp / n) - cmath.exp(2j * cmath.pi * e / n)) < ATOL


def test_unit_form_of_a_non_unit_is_none():
    assert (CycInt.one(5) + CycInt.one(5)).unit_form() is None


@given(conductors, st.integers(-50, 50), st.integers(-50, 50))
def test_root_of_unity_group_laws(n, a, b):
    x, y = RootOfUnity(n, a), RootOfUnity(n, b)
    assert (x * y).exponent == (a + b) % n
    assert (x / y * y) == x
    assert (x * x.inverse()).is_one()
    assert (x ** x.order()).is_one()


def test_rescale_conductor():
    assert rescale_conductor(RootOfUnity(3, 2), 12) == RootOfUnity(12, 8)
    with pytest.raises(NotDivisible):
        rescale_conductor(RootOfUnity(3, 1), 10)


def test_mixed_conductors_raise():
    with pytest.raises(ConductorMismatch):
        RootOfUnity(3, 1) * RootOfUnity(4, 1)
    with pytest.raises(ConductorMismatch):
        CycInt.one(3) + CycInt.one(4)
