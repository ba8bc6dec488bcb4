from fractions import Fraction

import pytest

from speh.affine_line import (
    AffinePointKind,
    AnalyticityReason,
    Disc,
    DiscKind,
    boundedness_oracle,
    classify_affine_point,
    disc_membership,
    fp_line_classify,
    fp_padic_value,
    hk_classify,
    hk_evaluate,
    is_analytic,
    lower_bound_witness,
    monomial_upper_bound_check,
    upper_bound_witness,
)
from speh.errors import DomainMismatch, Inconclusive, NotNonArchimedean
from speh.places import (
    DiscSequence,
    MajorKind,
    MajorSubset,
    arch_eval,
    arch_infinitesimal,
    arch_infinity,
    fp_group,
    fp_padic,
    fp_residual,
    gauss_point,
    hk_case4,
    hk_immediate,
    padic_eval,
    padic_real,
    trivial_on,
)
from speh.rings import RingKind, qx, zx

EMPTY, ALL = MajorSubset(MajorKind.EMPTY), MajorSubset(MajorKind.ALL)
CUT = MajorSubset(MajorKind.CUT, Fraction(1, 5))


@pytest.mark.parametrize('place, kind', [
    (trivial_on(RingKind.ZX), AffinePointKind.TRIVIAL_POINT),
    (fp_residual(3, [1, 0, 1]), AffinePointKind.FP_RESIDUAL_POINT),
    (fp_padic(3, [0, 1]), AffinePointKind.FP_PADIC_POINT),
    (padic_eval(5, 2), AffinePointKind.HK_TYPE1),
    (gauss_point(5, 0, 1), AffinePointKind.HK_TYPE2_GAUSS),
    (hk_case4(5, 1, EMPTY), AffinePointKind.HK_TYPE4),
    (arch_eval(2), AffinePointKind.ARCH_EVAL_POINT),
    (arch_infinitesimal(2), AffinePointKind.ARCH_INF_POINT),
    (arch_infinity(), AffinePointKind.ARCH_INFINITY_POINT),
])
def test_classify_affine_point(place, kind):
    assert classify_affine_point(place).kind == kind


def test_non_line_place_is_inconclusive():
    with pytest.raises(Inconclusive):
        classify_affine_point(padic_real(5))


@pytest.mark.parametrize('place, analytic, reason', [
    (padic_eval(5, 2), True, AnalyticityReason.ANALYTIC),
    (gauss_point(5, 0, 1), True, AnalyticityReason.ANALYTIC),
    (hk_case4(5, 1, CUT), True, AnalyticityReason.ANALYTIC),
    (hk_case4(5, 1, ALL), False, AnalyticityReason.INFINITESIMAL_NBHD_OF_ALGEBRAIC_POINT),
    (hk_case4(5, 1, EMPTY), False, AnalyticityReason.INFINITESIMAL_NBHD_OF_INFINITY),
    (arch_eval(0), True, AnalyticityReason.ANALYTIC),
    (arch_infinitesimal(0), False, AnalyticityReason.INFINITESIMAL_NBHD_OF_ALGEBRAIC_POINT),
    (arch_infinity(), False, AnalyticityReason.INFINITESIMAL_NBHD_OF_INFINITY),
])
def test_analyticity(place, analytic, reason):
    verdict = is_analytic(classify_affine_point(place))
    assert verdict.analytic == analytic
    assert verdict.reason == reason


def test_hk_cases():
    assert hk_classify(classify_affine_point(padic_eval(3, 2))).case == 1
    report = hk_classify(classify_affine_point(gauss_point(3, 1, -2)))
    assert (report.case, report.radius_exp) == (2, Fraction(-2))
    sequence = DiscSequence(2, [(0, 0), (1, -1)])
    assert hk_classify(classify_affine_point(hk_immediate(sequence))).case == 3
    subcases = [hk_classify(classify_affine_point(hk_case4(5, 0, m))).subcase for m in (EMPTY, ALL, CUT)]
    assert subcases == ['a', 'b', 'c']


def test_hk_rejects_archimedean_points():
    with pytest.raises(NotNonArchimedean):
        hk_classify(classify_affine_point(arch_eval(1)))
    with pytest.raises(NotNonArchimedean):
        hk_evaluate(classify_affine_point(arch_infinity()), zx([0, 1]))


def test_hk_evaluate():
    point = classify_affine_point(gauss_point(3, 0, 0))
    assert hk_evaluate(point, zx([3, 9])).data.exponents == (Fraction(-1),)


def test_fp_line():
    point = fp_line_classify(fp_padic(2, [1, 1]))
    assert point.kind == AffinePointKind.FP_PADIC_POINT
    assert fp_padic_value(point.place, [1, 0, 1]).data.exponents == (Fraction(-2),)
    with pytest.raises(DomainMismatch):
        fp_line_classify(padic_eval(2, 0))


def test_padic_disc_membership():
    point = classify_affine_point(padic_eval(3, Fraction(1, 3)))
    assert disc_membership(point, Disc(0, DiscKind.CLOSED, radius_exp=Fraction(1)))
    assert not disc_membership(point, Disc(0, DiscKind.CLOSED, radius_exp=Fraction(0)))
    gauss = classify_affine_point(gauss_point(3, 0, 0))
    assert disc_membership(gauss, Disc(0, DiscKind.CLOSED, radius_exp=Fraction(0)))
    assert not disc_membership(gauss, Disc(0, DiscKind.OPEN, radius_exp=Fraction(0)))


def test_archimedean_disc_membership():
    point = classify_affine_point(arch_eval(2))
    assert disc_membership(point, Disc(0, DiscKind.CLOSED, radius=Fraction(2)))
    assert not disc_membership(point, Disc(0, DiscKind.OPEN, radius=Fraction(2)))
    near = classify_affine_point(arch_infinitesimal(2))
    assert disc_membership(near, Disc(2, DiscKind.OPEN, radius=Fraction(1, 1000)))
    with pytest.raises(DomainMismatch):
        disc_membership(point, Disc(0, radius_exp=Fraction(0)))


def test_boundedness():
    assert boundedness_oracle(arch_eval(1)) == (True, True)
    assert boundedness_oracle(arch_infinitesimal(1)) == (True, False)
    assert boundedness_oracle(arch_infinity()) == (False, True)
    with pytest.raises(DomainMismatch):
        boundedness_oracle(padic_eval(2, 0))


def test_bound_witnesses():
    assert upper_bound_witness(arch_eval(3), zx([0, 1])) == 3
    assert upper_bound_witness(arch_infinity(), zx([0, 1])) is None
    assert upper_bound_witness(arch_infinity(), zx([5])) == 5
    assert upper_bound_witness(arch_infinitesimal(1), zx([-1, 1])) == 1
    assert lower_bound_witness(arch_infinitesimal(1), zx([-1, 1])) is None
    assert lower_bound_witness(arch_infinity(), zx([0, 1])) == 1
    assert lower_bound_witness(arch_eval(3), zx([5])) == 5


def test_monomial_bounds():
    assert monomial_upper_bound_check(arch_eval(3))
    assert monomial_upper_bound_check(arch_infinitesimal(3))
    assert not monomial_upper_bound_check(arch_infinity())


def test_disc_needs_one_radius():
    with pytest.raises(DomainMismatch):
        Disc(0)
    with pytest.raises(DomainMismatch):
        Disc(0, radius=Fraction(-1))
    assert qx([0, 1]).degree == 1


def test_fp_padic_values_stay_in_the_value_group():
    place = fp_padic(2, [1, 1])
    assert fp_padic_value(place, [1, 0, 1]).data.group == fp_group(place)
    assert fp_padic_value(place, [0]).is_zero
    with pytest.raises(DomainMismatch):
        fp_padic_value(fp_residual(3, [1, 0, 1]), [1])
