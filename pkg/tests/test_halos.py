from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from speh.errors import MixedHalos, ZeroDenominator
from speh.halos import (
    HaloDescriptor,
    HaloValue,
    TemperedTag,
    halo_add,
    halo_cmp,
    halo_mul,
    halo_natural,
    halo_one,
    halo_pow,
    halo_zero,
    localized_cmp,
    rational_value,
    tempered_class,
    tempered_witness_check,
)
from speh.ordered_groups import GroupElement, OrderedGroupDescriptor, Ordering

Q = OrderedGroupDescriptor.of('q')
RAT = HaloDescriptor.rationals()
TROP = HaloDescriptor.tropical(Q)
SURDS = HaloDescriptor.surds()
LEX_RAT = HaloDescriptor.lex(RAT, RAT)

positive = st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50)
exponent = st.fractions(min_value=-20, max_value=20, max_denominator=10)


def trop(e) -> HaloValue:
    return HaloValue(TROP, GroupElement(Q, (Fraction(e),)))


@given(positive, positive, positive)
def test_rationals_distribute(x, y, z):
    a, b, c = (HaloValue(RAT, v) for v in (x, y, z))
    assert halo_mul(RAT, a, halo_add(RAT, b, c)) == halo_add(RAT, halo_mul(RAT, a, b), halo_mul(RAT, a, c))


@given(exponent, exponent)
def test_tropical_addition_is_max(x, y):
    assert halo_add(TROP, trop(x), trop(y)) == trop(max(x, y))
    assert halo_mul(TROP, trop(x), trop(y)) == trop(x + y)


@given(exponent)
def test_tropical_addition_is_idempotent(x):
    assert halo_add(TROP, trop(x), trop(x)) == trop(x)


def test_zero_and_one():
    for h in (HaloDescriptor.trivial(), TROP, RAT, SURDS, LEX_RAT):
        zero, one = halo_zero(h), halo_one(h)
        assert halo_cmp(h, zero, one) == Ordering.LESS
        assert halo_add(h, zero, one) == one
        assert halo_mul(h, zero, one) == zero


def test_naturals():
    assert halo_natural(RAT, 5) == rational_value(RAT, 5)
    assert halo_natural(TROP, 5) == halo_one(TROP)
    assert halo_natural(RAT, 0) == halo_zero(RAT)


def test_lex_compares_first_coordinate_first():
    small_first = HaloValue(LEX_RAT, (rational_value(RAT, 1), rational_value(RAT, 1000)))
    big_first = HaloValue(LEX_RAT, (rational_value(RAT, 2), rational_value(RAT, 1)))
    assert halo_cmp(LEX_RAT, small_first, big_first) == Ordering.LESS


def test_mixed_halos_rejected():
    with pytest.raises(MixedHalos):
        halo_add(RAT, halo_one(RAT), halo_one(SURDS))
    with pytest.raises(MixedHalos):
        HaloValue(RAT, Fraction(-1))


def test_localized_compare():
    two, three = rational_value(RAT, 2), rational_value(RAT, 3)
    assert localized_cmp(RAT, halo_one(RAT), two, two, three) == Ordering.LESS
    assert localized_cmp(RAT, two, three, halo_one(RAT), two) == Ordering.GREATER
    with pytest.raises(ZeroDenominator):
        localized_cmp(RAT, two, halo_zero(RAT), two, two)


def test_pow():
    assert halo_pow(RAT, rational_value(RAT, 2), 10) == rational_value(RAT, 1024)
    assert halo_pow(TROP, trop(3), 0) == halo_one(TROP)


def test_tempered_classes():
    assert tempered_class(HaloDescriptor.trivial()).tag == TemperedTag.TEMPERED
    assert tempered_class(TROP).tag == TemperedTag.TEMPERED
    assert tempered_class(RAT).tag == TemperedTag.TEMPERED
    assert tempered_class(SURDS).tag == TemperedTag.TEMPERED
    assert tempered_class(HaloDescriptor.lex(TROP, RAT)).tag == TemperedTag.TEMPERED
    assert tempered_class(HaloDescriptor.lex(SURDS, SURDS)).tag == TemperedTag.UNKNOWN


def test_lex_rationals_not_tempered():
    verdict = tempered_class(LEX_RAT)
    assert verdict.tag == TemperedTag.NOT_TEMPERED
    assert verdict.bound_poly == (2, 1)
    assert verdict.witness == HaloValue(LEX_RAT, (rational_value(RAT, 1), rational_value(RAT, 2)))
    assert halo_cmp(LEX_RAT, verdict.witness, halo_one(LEX_RAT)) == Ordering.GREATER
    assert tempered_witness_check(LEX_RAT, verdict.witness, verdict.bound_poly, 1000)


def test_growing_rational_fails_witness_check():
    assert not tempered_witness_check(RAT, rational_value(RAT, 2), (2, 1), 100)
    assert tempered_witness_check(RAT, rational_value(RAT, 1), (2, 1), 100)
