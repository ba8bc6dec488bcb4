from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import primerange

from speh import config
from speh.classification import (
    ZClassTag,
    check_multiplicative_on,
    check_power_multiplicative_on,
    check_prearchimedean_on,
    check_seminorm_axioms_on,
    check_square_multiplicative_on,
    check_ultrametric_on,
    classify_on_Z,
    equivalent_oracle,
    increasing_on_naturals,
    is_nonarchimedean,
    minus_one_check,
    mult_bounded_by,
    negation_symmetry_check,
    sorted_pairs,
)
from speh.errors import Inconclusive, UnsupportedPair, UnsupportedPlace
from speh.halos import HaloDescriptor, HaloValue
from speh.places import (
    MajorKind,
    MajorSubset,
    OpaquePlace,
    arch_eval,
    arch_infinitesimal,
    archimedean_z,
    composite_adic,
    composite_residual,
    gauss_point,
    hk_case4,
    padic_power,
    padic_real,
    padic_trop,
    residual,
    trivial_on,
)
from speh.rings import RingKind

ints = st.integers(min_value=-10 ** 6, max_value=10 ** 6)
PRIMES = [int(p) for p in primerange(2, 101)]


@pytest.mark.parametrize('p', PRIMES)
def test_padic_places_classify_as_padic(p):
    for place in (padic_real(p), padic_trop(p)):
        result = classify_on_Z(place)
        assert result.tag == ZClassTag.PADIC
        assert result.p == p
    assert classify_on_Z(residual(p)).tag == ZClassTag.RESIDUAL


def test_archimedean_and_trivial():
    assert classify_on_Z(archimedean_z()).tag == ZClassTag.ARCHIMEDEAN
    assert classify_on_Z(trivial_on(RingKind.Z), prime_bound=50).tag == ZClassTag.TRIVIAL
    assert classify_on_Z(gauss_point(5, 0, 0)).p == 5
    assert classify_on_Z(arch_eval(3)).tag == ZClassTag.ARCHIMEDEAN


def test_composite_places_are_not_classified():
    with pytest.raises(UnsupportedPlace):
        classify_on_Z(composite_adic(6))
    with pytest.raises(UnsupportedPlace):
        classify_on_Z(composite_residual(6))


def test_opaque_trivial_place_is_inconclusive():
    h = HaloDescriptor.trivial()
    place = OpaquePlace('flat', h, lambda x: HaloValue(h, None if x.is_zero else 1))
    with pytest.raises(Inconclusive):
        classify_on_Z(place, prime_bound=20)


@given(ints, ints)
def test_padic_places_are_ultrametric(a, b):
    for place in (padic_real(3), padic_trop(5), residual(7)):
        assert check_ultrametric_on(place, [(a, b)])
        assert check_multiplicative_on(place, [(a, b)])


@given(ints, ints)
def test_archimedean_is_prearchimedean(a, b):
    assert check_prearchimedean_on(archimedean_z(), [(a, b)])
    assert check_seminorm_axioms_on(archimedean_z(), [(a, b)])


@given(ints)
def test_negation_symmetry(a):
    for place in (archimedean_z(), padic_real(2), residual(3), composite_adic(6)):
        assert negation_symmetry_check(place, [a])


def test_nonarchimedean():
    assert is_nonarchimedean(padic_real(2))
    assert is_nonarchimedean(trivial_on(RingKind.Z))
    assert not is_nonarchimedean(archimedean_z())
    assert not check_ultrametric_on(archimedean_z(), [(1, 1)])


def test_minus_one():
    for place in (archimedean_z(), padic_real(5), residual(2)):
        assert minus_one_check(place)


def test_composite_first_counterexample():
    place = composite_adic(6)
    result = check_multiplicative_on(place, sorted_pairs(list(range(1, 13))))
    assert not result
    assert result.counterexample == (2, 3)
    assert check_power_multiplicative_on(place, range(1, 200), 6)


def test_increasing_on_naturals():
    assert increasing_on_naturals(archimedean_z(), config.ACCEPTANCE_SAMPLES)
    assert not increasing_on_naturals(padic_real(2), 10)


def test_prearchimedean_on_sampled_pairs(rng):
    pairs = [(rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6))
             for _ in range(config.ACCEPTANCE_SAMPLES)]
    assert check_prearchimedean_on(archimedean_z(), pairs)


def test_padic_trop_equivalent_to_padic_real(rng):
    triples = [tuple(rng.randint(-500, 500) or 1 for _ in range(3)) for _ in range(config.ACCEPTANCE_SAMPLES)]
    for p in (2, 3, 5):
        assert mult_bounded_by(padic_trop(p), padic_real(p), triples)
        assert mult_bounded_by(padic_real(p), padic_trop(p), triples)
    assert not mult_bounded_by(padic_real(2), padic_real(3), [(1, 2, 1)])


def test_equivalence_oracle():
    assert equivalent_oracle(padic_trop(3), padic_real(3))
    assert equivalent_oracle(padic_power(3, 2), padic_real(3))
    assert equivalent_oracle(padic_power(3, 0), trivial_on(RingKind.Z))
    assert not equivalent_oracle(padic_real(3), residual(3))
    assert equivalent_oracle(arch_eval((1, 2)), arch_eval((1, -2)))
    assert not equivalent_oracle(arch_eval(1), arch_infinitesimal(1))


def test_equivalence_of_discs():
    assert equivalent_oracle(gauss_point(2, 0, 0), gauss_point(2, 1, 0))
    assert not equivalent_oracle(gauss_point(2, 0, -1), gauss_point(2, 1, -1))
    cut = MajorSubset(MajorKind.CUT, 2)
    assert equivalent_oracle(hk_case4(2, 0, cut), hk_case4(2, 4, cut))
    assert not equivalent_oracle(hk_case4(2, 0, cut), hk_case4(2, 1, cut))


def test_equivalence_needs_a_common_ring():
    with pytest.raises(UnsupportedPair):
        equivalent_oracle(padic_real(2), gauss_point(2, 0, 0))


def test_square_multiplicativity():
    assert check_square_multiplicative_on(composite_adic(6), range(1, 200))
    assert check_square_multiplicative_on(composite_residual(6), range(1, 200))
    rat = HaloDescriptor.rationals()
    flat = OpaquePlace('flat', rat, lambda x: HaloValue(rat, None if x.is_zero else Fraction(2)))
    result = check_square_multiplicative_on(flat, range(1, 5))
    assert result.counterexample == (1, 2)
