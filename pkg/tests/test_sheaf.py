from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from speh.errors import DomainMismatch, Inconclusive, MixedRings, NotIntegral, UnrecognizedDomainShape
from speh.places import (
    archimedean_z,
    composite_adic,
    gauss_point,
    padic_real,
    padic_trop,
    residual,
    trivial_on,
)
from speh.rings import RingKind
from speh.sheaf import (
    CompletedElement,
    RingDescriptor,
    TinyBallDisjunct,
    adele_add,
    adele_diagonal,
    adele_germ_assemble,
    adele_mul,
    completed_add,
    completed_agrees,
    completed_mul,
    completed_neg,
    completed_valuation,
    completion_map,
    germ_at,
    sections_on_domain,
    tiny_ball_report,
)
from speh.spectra import SpehPoint, domain_intersection, rational_domain

Z2, Q2, R = RingDescriptor.padic_integers(2), RingDescriptor.padic_field(2), RingDescriptor.real()
odd_denominator = st.builds(
    Fraction,
    st.integers(min_value=-999, max_value=999),
    st.sampled_from([1, 3, 5, 7, 9, 11]),
)


@pytest.mark.parametrize('domain, ring', [
    (rational_domain([0], 6), RingDescriptor.localized(6)),
    (rational_domain([0], 1), RingDescriptor.localized(1)),
    (rational_domain([2], 1), RingDescriptor.padic_integers(2)),
    (domain_intersection(rational_domain([0], 3), rational_domain([3], 1)), RingDescriptor.padic_field(3)),
    (rational_domain([1], 2), RingDescriptor.real()),
])
def test_sections_table(domain, ring):
    assert sections_on_domain(domain) == ring


def test_section_names():
    assert str(sections_on_domain(rational_domain([0], 6))) == 'Z[1/6]'
    assert str(sections_on_domain(rational_domain([0], 1))) == 'Z'
    product = RingDescriptor.product([RingDescriptor.product([Z2, R]), RingDescriptor.padic_field(3)])
    assert str(product) == 'Z_2 x R x Q_3'


def test_unrecognized_domains():
    with pytest.raises(UnrecognizedDomainShape):
        sections_on_domain(rational_domain([1], 1))
    with pytest.raises(UnrecognizedDomainShape):
        sections_on_domain(rational_domain([[0, 1]], [1]))


def test_germs():
    assert germ_at(SpehPoint(residual(2))) == Z2
    assert germ_at(padic_trop(2)) == Q2
    assert germ_at(archimedean_z()) == R
    assert germ_at(trivial_on(RingKind.Z)) == RingDescriptor.rational()
    assert RingDescriptor.rational().topology == 'discrete'
    with pytest.raises(DomainMismatch):
        germ_at(gauss_point(2, 0, 0))


def test_completion_into_padic_integers():
    x = completion_map(Fraction(1, 3), Z2, 4)
    assert x.residue == 11
    assert x.valuation == 0
    assert completed_agrees(x, Fraction(49, 3))
    assert not completed_agrees(x, Fraction(2, 3))
    with pytest.raises(NotIntegral):
        completion_map(Fraction(1, 2), Z2)


def test_completion_into_padic_field():
    x = completion_map(Fraction(1, 2), Q2, 3)
    assert completed_valuation(x) == -1
    assert x.residue == 1
    zero = completion_map(0, Q2, 5)
    assert (zero.precision, zero.valuation) == (0, 5)


def test_truncated_addition_wraps():
    total = completed_add(completion_map(1, Z2, 3), completion_map(7, Z2, 3))
    assert total.residue == 0
    assert total.valuation == 3


def test_interval_multiplication():
    x = CompletedElement(R, lower=Fraction(5, 4), upper=Fraction(3, 2), precision=2)
    y = CompletedElement(R, lower=Fraction(2), upper=Fraction(2), precision=2)
    product = completed_mul(x, y)
    assert (product.lower, product.upper) == (Fraction(5, 2), Fraction(3))
    negated = completed_neg(x)
    assert (negated.lower, negated.upper) == (Fraction(-3, 2), Fraction(-5, 4))


def test_padic_field_multiplication():
    product = completed_mul(completion_map(Fraction(1, 2), Q2, 3), completion_map(2, Q2, 3))
    assert product.valuation == 0
    assert completed_agrees(product, 1)


@given(odd_denominator, odd_denominator)
def test_completion_is_a_ring_map(a, b):
    ma, mb = completion_map(a, Z2, 8), completion_map(b, Z2, 8)
    assert completion_map(a + b, Z2, 8) == completed_add(ma, mb)
    assert completion_map(a * b, Z2, 8) == completed_mul(ma, mb)


def test_completion_errors():
    with pytest.raises(NotIntegral):
        completion_map(Fraction(1, 5), RingDescriptor.localized(6))
    with pytest.raises(DomainMismatch):
        completion_map(1, RingDescriptor.finite_field(3))
    with pytest.raises(MixedRings):
        completed_add(completion_map(1, Z2), completion_map(1, Q2))
    with pytest.raises(DomainMismatch):
        completed_valuation(completion_map(1, R))


def test_adele_diagonal():
    adele = adele_diagonal(Fraction(1, 6), 6, 4)
    assert adele.primes == (2, 3)
    assert adele.component(2).valuation == -1
    assert adele.component(2).residue == 11
    assert adele.component(3).residue == 41
    assert (adele.real.lower, adele.real.upper) == (Fraction(1, 8), Fraction(3, 16))
    with pytest.raises(NotIntegral):
        adele_diagonal(Fraction(1, 5), 6)


def test_adele_addition_is_one_sided_outside_shared_primes():
    total = adele_add(adele_diagonal(Fraction(1, 2), 2, 4), adele_diagonal(Fraction(1, 3), 3, 4))
    assert total.primes == (2, 3)
    assert completed_agrees(total.component(2), Fraction(5, 6))
    assert completed_agrees(total.component(3), Fraction(5, 6))
    assert total.real.lower <= Fraction(5, 6) <= total.real.upper


def test_adele_product_drops_integral_components():
    product = adele_mul(adele_diagonal(Fraction(1, 2), 2, 4), adele_diagonal(3, 3, 4))
    assert product.primes == (2,)
    assert product.component(2).valuation == -1


def test_adele_assemble_validates():
    adele = adele_germ_assemble({3: Fraction(1, 9)}, (0, 1), 4)
    assert adele.component(3).valuation == -2
    with pytest.raises(DomainMismatch):
        adele_germ_assemble({4: 1}, 0)
    with pytest.raises(DomainMismatch):
        adele_germ_assemble({}, (1, 0))


@pytest.mark.parametrize('place, disjunct, witness', [
    (padic_real(2), TinyBallDisjunct.LARGE_ELEMENT, '1/4'),
    (padic_trop(2), TinyBallDisjunct.LARGE_ELEMENT, '1/2'),
    (archimedean_z(), TinyBallDisjunct.LARGE_ELEMENT, '3'),
    (gauss_point(3, 0, 0), TinyBallDisjunct.LARGE_ELEMENT, '1/3'),
    (residual(5), TinyBallDisjunct.DISCRETE, '1'),
])
def test_tiny_ball(place, disjunct, witness):
    report = tiny_ball_report(place)
    assert (report.disjunct, report.witness) == (disjunct, witness)


def test_tiny_ball_needs_multiplicative_place():
    with pytest.raises(Inconclusive):
        tiny_ball_report(composite_adic(6))
