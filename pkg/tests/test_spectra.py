from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from speh.errors import DomainMismatch, FactorizationRequired, RangeError, ZeroDenominator
from speh.places import (
    PlaceKind,
    archimedean_z,
    composite_adic,
    gauss_point,
    padic_eval,
    padic_real,
    padic_trop,
    residual,
    trivial_on,
)
from speh.rings import RingKind
from speh.spectra import (
    BerkovichKind,
    BerkovichPoint,
    SpehPoint,
    berkovich_to_speh,
    domain_intersection,
    domain_membership,
    enumerate_members,
    full_domain,
    rational_domain,
    residue_field_at,
    spev_subset_check,
    speh_points_of_Z,
)

entries = st.sampled_from([0, 1, 2, 3, 5, 6, 10, 15])
denominators = st.sampled_from([1, 2, 3, 5, 6, 7, 10])
POINTS = speh_points_of_Z(13)


def test_point_counts():
    assert len(speh_points_of_Z(10)) == 10
    assert len(speh_points_of_Z(2)) == 4
    with pytest.raises(RangeError):
        speh_points_of_Z(1)


def test_point_order():
    kinds = [x.place.kind for x in speh_points_of_Z(3)]
    assert kinds == [
        PlaceKind.TRIVIAL, PlaceKind.PADIC_REAL, PlaceKind.RESIDUAL,
        PlaceKind.PADIC_REAL, PlaceKind.RESIDUAL, PlaceKind.ARCHIMEDEAN,
    ]


def test_points_are_classes():
    assert SpehPoint(padic_trop(3)) == SpehPoint(padic_real(3))
    assert hash(SpehPoint(padic_trop(3))) == hash(SpehPoint(padic_real(3)))
    assert SpehPoint(padic_real(3)) != SpehPoint(residual(3))
    assert SpehPoint(padic_real(3)) != SpehPoint(gauss_point(3, 0, 0))
    assert len(set(POINTS)) == len(POINTS)


def test_localization_domain():
    domain = rational_domain([0], 6)
    assert domain_membership(trivial_on(RingKind.Z), domain)
    assert domain_membership(padic_real(2), domain)
    assert domain_membership(archimedean_z(), domain)
    assert not domain_membership(residual(2), domain)
    assert domain_membership(residual(5), domain)


def test_non_strict_domain():
    domain = rational_domain([1], 2, strict=False)
    assert domain_membership(archimedean_z(), domain)
    assert domain_membership(residual(3), domain)
    assert not domain_membership(padic_real(2), domain)


def test_full_domain_contains_everything():
    domain = rational_domain([], 1)
    assert all(domain_membership(x, domain) for x in POINTS)
    assert full_domain().denominator.scalar == 1


def test_composite_divisors_must_be_multiplicative():
    assert not domain_membership(composite_adic(6), rational_domain([], 2))
    assert domain_membership(composite_adic(6), rational_domain([], 5))


@given(st.lists(entries, max_size=2), denominators, st.lists(entries, max_size=2), denominators)
def test_intersection_is_pointwise(num1, den1, num2, den2):
    first, second = rational_domain(num1, den1), rational_domain(num2, den2)
    both = domain_intersection(first, second)
    for x in POINTS:
        assert domain_membership(x, both) == (domain_membership(x, first) and domain_membership(x, second))


def test_intersection_needs_matching_domains():
    with pytest.raises(DomainMismatch):
        domain_intersection(rational_domain([1], 2), rational_domain([1], 2, strict=False))


def test_polynomial_domains():
    domain = rational_domain([[0, 1]], [1], denominator_factors=[])
    assert domain.ring == RingKind.ZX
    assert domain_membership(padic_eval(3, Fraction(1, 9)), domain) is False
    assert domain_membership(padic_eval(3, 3), domain)


def test_divisors_need_factorization():
    with pytest.raises(FactorizationRequired):
        domain_membership(composite_adic(6), rational_domain([], 10 ** 13 + 1))


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_domain([1], 0)


def test_spev():
    assert spev_subset_check(SpehPoint(padic_real(5)))
    assert spev_subset_check(residual(5))
    assert not spev_subset_check(archimedean_z())


def test_enumerate_members():
    members = enumerate_members(rational_domain([1], 2), prime_bound=7)
    assert members == [SpehPoint(archimedean_z())]


def test_residue_fields():
    assert residue_field_at(residual(7)) == 'F_7'
    assert residue_field_at(padic_real(7)) == 'Q_7'
    assert residue_field_at(archimedean_z()) == 'R'
    assert residue_field_at(trivial_on(RingKind.Z)) == 'Q'
    with pytest.raises(DomainMismatch):
        residue_field_at(gauss_point(2, 0, 0))


def test_berkovich_points():
    assert berkovich_to_speh(BerkovichPoint(BerkovichKind.P_POWER, 3, 2)) == SpehPoint(padic_real(3))
    assert berkovich_to_speh(BerkovichPoint(BerkovichKind.P_POWER, 3, 0)) == SpehPoint(trivial_on(RingKind.Z))
    assert berkovich_to_speh(BerkovichPoint(BerkovichKind.ARCH_POWER, t=Fraction(1, 2))) == \
        SpehPoint(archimedean_z())
    assert berkovich_to_speh(BerkovichPoint(BerkovichKind.RESIDUAL, 5)) == SpehPoint(residual(5))
    with pytest.raises(RangeError):
        BerkovichPoint(BerkovichKind.ARCH_POWER, t=2)
    with pytest.raises(RangeError):
        BerkovichPoint(BerkovichKind.P_POWER, 4, 1)
