from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from speh.errors import UnsupportedPlace
from speh.halos import HaloDescriptor, HaloValue
from speh.places import (
    PlaceKind,
    OpaquePlace,
    arch_eval,
    arch_infinitesimal,
    arch_infinity,
    archimedean_z,
    evaluate,
    gauss_point,
    padic_real,
    residual,
)
from speh.retraction import LOG_GROUP, huber_retract, value_group_presentation
from speh.rings import zx

coeffs = st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=5)


def test_infinitesimal_point_retracts_to_quotient():
    retracted = huber_retract(arch_infinitesimal(2))
    assert retracted.kind == PlaceKind.HUBER_QUOTIENT
    assert retracted.inner == arch_infinitesimal(2)


@pytest.mark.parametrize('place', [
    padic_real(3), residual(5), archimedean_z(), gauss_point(2, 0, 0), arch_eval(1), arch_infinity(),
])
def test_other_places_are_fixed(place):
    assert huber_retract(place) == place


def test_retraction_is_idempotent():
    once = huber_retract(arch_infinitesimal(0))
    assert huber_retract(once) == once


@given(coeffs)
def test_retract_agrees_with_evaluation_off_the_center(cs):
    elem = zx(cs)
    target = arch_eval(1)
    if evaluate(target, elem).is_zero:
        return
    assert evaluate(huber_retract(arch_infinitesimal(1)), elem) == evaluate(target, elem)


def test_value_group_presentation():
    group, two = value_group_presentation(archimedean_z())
    assert group == LOG_GROUP
    assert two.exponents == (Fraction(1),)
    group, two = value_group_presentation(padic_real(2))
    assert two.exponents == (Fraction(-1),)
    group, two = value_group_presentation(arch_infinitesimal(0))
    assert group.labels == ('log', 'q')


def test_opaque_places_rejected():
    h = HaloDescriptor.rationals()
    with pytest.raises(UnsupportedPlace):
        huber_retract(OpaquePlace('x', h, lambda x: HaloValue(h, None)))
