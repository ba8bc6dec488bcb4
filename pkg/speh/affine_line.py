"""
Points of the affine line over ℤ: the Huber–Knebusch disc-filter cases over a
p-adic place, the archimedean cases, and the analyticity verdict.
"""
import logging
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Tuple

from .classification import ZClassTag, classify_on_Z
from .errors import DomainMismatch, Inconclusive, NotNonArchimedean
from .halos import HaloKind, HaloValue, halo_cmp, halo_one
from .ordered_groups import GroupElement, Ordering
from .places import (
    ARCH_LINE_KINDS,
    FP_KINDS,
    PADIC_LINE_KINDS,
    IdealKind,
    MajorKind,
    PlaceDescriptor,
    PlaceKind,
    evaluate,
    fp_group,
    is_catalog,
    kernel,
    restrict_to_Z,
)
from .rings import fpx, monomial_shift
from .surds import Surd

logger = logging.getLogger(__name__)


class AffinePointKind(Enum):
    TRIVIAL_POINT = auto()
    FP_RESIDUAL_POINT = auto()
    FP_PADIC_POINT = auto()
    HK_TYPE1 = auto()
    HK_TYPE2_GAUSS = auto()
    HK_TYPE3_IMMEDIATE = auto()
    HK_TYPE4 = auto()
    ARCH_EVAL_POINT = auto()
    ARCH_INF_POINT = auto()
    ARCH_INFINITY_POINT = auto()


_KIND_OF_PLACE = {
    PlaceKind.FP_RESIDUAL: AffinePointKind.FP_RESIDUAL_POINT,
    PlaceKind.FP_PADIC: AffinePointKind.FP_PADIC_POINT,
    PlaceKind.PADIC_EVAL: AffinePointKind.HK_TYPE1,
    PlaceKind.GAUSS_POINT: AffinePointKind.HK_TYPE2_GAUSS,
    PlaceKind.HK_IMMEDIATE: AffinePointKind.HK_TYPE3_IMMEDIATE,
    PlaceKind.HK_CASE4: AffinePointKind.HK_TYPE4,
}

NON_ARCHIMEDEAN_POINTS = (
    AffinePointKind.HK_TYPE1, AffinePointKind.HK_TYPE2_GAUSS,
    AffinePointKind.HK_TYPE3_IMMEDIATE, AffinePointKind.HK_TYPE4,
)
ARCHIMEDEAN_POINTS = (
    AffinePointKind.ARCH_EVAL_POINT, AffinePointKind.ARCH_INF_POINT,
    AffinePointKind.ARCH_INFINITY_POINT,
)


@dataclass(frozen=True)
class AffinePoint:
    """A classified point; place carries exactly the data its formula needs."""
    kind: AffinePointKind
    place: PlaceDescriptor


class DiscKind(Enum):
    CLOSED = 'closed'
    OPEN = 'open'


@dataclass(frozen=True)
class Disc:
    """{x : |x - center| ≤ radius} (closed) or < radius (open).

    p-adic discs carry radius_exp (radius p^radius_exp); archimedean discs a
    positive rational radius.
    """
    center: Fraction
    kind: DiscKind = DiscKind.CLOSED
    radius_exp: Optional[Fraction] = None
    radius: Optional[Fraction] = None

    def __post_init__(self):
        if (self.radius_exp is None) == (self.radius is None):
            raise DomainMismatch("a disc has either a p-adic radius exponent or a real radius")
        if self.radius is not None and self.radius <= 0:
            raise DomainMismatch(f"disc radius {self.radius} must be positive")

    @property
    def archimedean(self) -> bool:
        return self.radius is not None


class AnalyticityReason(Enum):
    ANALYTIC = 'analytic'
    INFINITESIMAL_NBHD_OF_ALGEBRAIC_POINT = 'infinitesimal_nbhd_of_algebraic_point'
    INFINITESIMAL_NBHD_OF_INFINITY = 'infinitesimal_nbhd_of_infinity'


@dataclass(frozen=True)
class AnalyticityVerdict:
    analytic: bool
    reason: AnalyticityReason


@dataclass(frozen=True)
class FilterCaseReport:
    case: int
    subcase: Optional[str]
    description: str
    center: Optional[Fraction] = None
    radius_exp: Optional[Fraction] = None
    discs: Tuple[Tuple[Fraction, Fraction], ...] = ()
    major: Optional[str] = None


# Classification

def boundedness_oracle(place) -> Tuple[bool, bool]:
    """(upper bounded, lower bounded) for an archimedean affine place."""
    if not is_catalog(place) or place.kind not in ARCH_LINE_KINDS:
        raise DomainMismatch(f"{place} is not an archimedean point of the affine line")
    return {
        PlaceKind.ARCH_EVAL: (True, True),
        PlaceKind.ARCH_INFINITESIMAL: (True, False),
        PlaceKind.ARCH_INFINITY: (False, True),
    }[place.kind]


def classify_affine_point(place) -> AffinePoint:
    """Restrict to ℤ, then split on the kernel, |2| and boundedness."""
    if not is_catalog(place):
        raise Inconclusive(f"{place} is not a catalog place")
    on_z = classify_on_Z(restrict_to_Z(place))

    if on_z.tag == ZClassTag.TRIVIAL:
        if place.kind != PlaceKind.TRIVIAL:
            raise Inconclusive(f"{place} is trivial on ℤ but not a catalog point")
        return AffinePoint(AffinePointKind.TRIVIAL_POINT, place)

    if on_z.tag == ZClassTag.RESIDUAL:
        if place.kind not in FP_KINDS:
            raise Inconclusive(f"{place} has residual restriction but no 𝔽_p[X] data")
        nonzero_kernel = kernel(place).kind != IdealKind.ZERO
        kind = AffinePointKind.FP_RESIDUAL_POINT if nonzero_kernel else AffinePointKind.FP_PADIC_POINT
        return AffinePoint(kind, place)

    if on_z.tag == ZClassTag.ARCHIMEDEAN:
        upper, lower = boundedness_oracle(place)
        if upper and lower:
            return AffinePoint(AffinePointKind.ARCH_EVAL_POINT, place)
        if upper:
            return AffinePoint(AffinePointKind.ARCH_INF_POINT, place)
        return AffinePoint(AffinePointKind.ARCH_INFINITY_POINT, place)

    if place.kind not in PADIC_LINE_KINDS:
        raise Inconclusive(f"{place} is p-adic on ℤ but not a catalog point")
    return AffinePoint(_KIND_OF_PLACE[place.kind], place)


def fp_line_classify(place) -> AffinePoint:
    if not is_catalog(place) or place.kind not in FP_KINDS:
        raise DomainMismatch(f"{place} is not a place on 𝔽_p[X]")
    return AffinePoint(_KIND_OF_PLACE[place.kind], place)


def fp_padic_value(place: PlaceDescriptor, coeffs) -> HaloValue:
    """|Q|_P = P^(-ord_P Q) for a P-adic point of 𝔽_p[X]."""
    if place.kind != PlaceKind.FP_PADIC:
        raise DomainMismatch(f"{place} is not P-adic")
    value = evaluate(place, fpx(place.p, coeffs))
    if not value.is_zero and value.data.group != fp_group(place):
        raise DomainMismatch(f"{place} returned a value outside its own value group")
    return value


def is_analytic(point: AffinePoint) -> AnalyticityVerdict:
    if point.kind == AffinePointKind.ARCH_INF_POINT:
        return AnalyticityVerdict(False, AnalyticityReason.INFINITESIMAL_NBHD_OF_ALGEBRAIC_POINT)
    if point.kind == AffinePointKind.ARCH_INFINITY_POINT:
        return AnalyticityVerdict(False, AnalyticityReason.INFINITESIMAL_NBHD_OF_INFINITY)
    if point.kind == AffinePointKind.HK_TYPE4:
        major = point.place.major.kind
        if major == MajorKind.ALL:
            return AnalyticityVerdict(False, AnalyticityReason.INFINITESIMAL_NBHD_OF_ALGEBRAIC_POINT)
        if major == MajorKind.EMPTY:
            return AnalyticityVerdict(False, AnalyticityReason.INFINITESIMAL_NBHD_OF_INFINITY)
    return AnalyticityVerdict(True, AnalyticityReason.ANALYTIC)


# Huber–Knebusch cases

def _require_nonarchimedean(point: AffinePoint) -> None:
    if point.kind in ARCHIMEDEAN_POINTS:
        raise NotNonArchimedean(f"{point.place} is archimedean")
    if point.kind not in NON_ARCHIMEDEAN_POINTS:
        raise DomainMismatch(f"{point.place} has no disc filter over ℚ_p")


def hk_classify(point: AffinePoint) -> FilterCaseReport:
    _require_nonarchimedean(point)
    place = point.place
    if point.kind == AffinePointKind.HK_TYPE1:
        return FilterCaseReport(
            1, None, "principal filter at a: P ↦ |P(a)|", center=place.center,
        )
    if point.kind == AffinePointKind.HK_TYPE2_GAUSS:
        return FilterCaseReport(
            2, None, "closed-disc filter: generalized Gauss valuation",
            center=place.center, radius_exp=place.radius_exp,
        )
    if point.kind == AffinePointKind.HK_TYPE3_IMMEDIATE:
        return FilterCaseReport(
            3, None, "nested discs with empty intersection: immediate extension",
            discs=place.sequence.prefix,
        )
    major = place.major
    subcase = {MajorKind.EMPTY: 'a', MajorKind.ALL: 'b', MajorKind.CUT: 'c'}[major.kind]
    label = major.kind.value if major.bound is None else f"cut at |{major.bound}|"
    return FilterCaseReport(
        4, subcase, "filter of discs around a with a major subset of |ℚ*|",
        center=place.center, major=label,
    )


def hk_evaluate(point: AffinePoint, f) -> HaloValue:
    _require_nonarchimedean(point)
    return evaluate(point.place, f)


def _embedded_radius(point: AffinePoint, disc: Disc) -> HaloValue:
    place = point.place
    h = place.codomain
    if disc.archimedean != (point.kind in ARCHIMEDEAN_POINTS):
        raise DomainMismatch(f"disc and point {place} live over different completions")
    if point.kind in NON_ARCHIMEDEAN_POINTS:
        r = disc.radius_exp
        if point.kind != AffinePointKind.HK_TYPE4:
            return HaloValue(h, GroupElement(h.group, (r,)))
        exps = (r, Fraction(0)) if place.major.kind == MajorKind.CUT else (Fraction(0), r)
        return HaloValue(h, GroupElement(h.group, exps))
    if h.kind == HaloKind.SURDS:
        return HaloValue(h, Surd.rational(disc.radius))
    one = halo_one(h)
    return HaloValue(h, (one.data[0], HaloValue(h.second, Surd.rational(disc.radius))))


def disc_membership(point: AffinePoint, disc: Disc) -> bool:
    if point.kind not in NON_ARCHIMEDEAN_POINTS + ARCHIMEDEAN_POINTS:
        raise DomainMismatch(f"{point.place} does not see discs")
    h = point.place.codomain
    distance = evaluate(point.place, monomial_shift(disc.center))
    verdict = halo_cmp(h, distance, _embedded_radius(point, disc))
    if disc.kind == DiscKind.CLOSED:
        return verdict != Ordering.GREATER
    return verdict == Ordering.LESS


# Boundedness witnesses for archimedean points

def upper_bound_witness(place, f, bits: int = 16) -> Optional[int]:
    """An integer λ with |f| ≤ |λ|, or None when f is not bounded above."""
    boundedness_oracle(place)
    value = evaluate(place, f)
    if value.is_zero:
        return 0
    if place.kind == PlaceKind.ARCH_EVAL:
        surd = value.data
    else:
        q_exponent, surd = value.data[0].data.exponents[0], value.data[1].data
        if q_exponent > 0:
            return None
        if q_exponent < 0:
            return 1
    _, hi = surd.interval(bits)
    return ceil(hi)


def lower_bound_witness(place, f, bits: int = 16) -> Optional[Fraction]:
    """A rational μ > 0 with |μ| ≤ |f|, or None when none exists."""
    boundedness_oracle(place)
    value = evaluate(place, f)
    if value.is_zero:
        return None
    if place.kind == PlaceKind.ARCH_EVAL:
        surd = value.data
    else:
        q_exponent, surd = value.data[0].data.exponents[0], value.data[1].data
        if q_exponent < 0:
            return None
        if q_exponent > 0:
            return Fraction(1)
    while True:
        lo, _ = surd.interval(bits)
        if lo > 0:
            return Fraction(floor(lo * 2 ** bits), 2 ** bits)
        bits *= 2


def monomial_upper_bound_check(place, n_bound: int = 16) -> bool:
    """Whether |X - a| ≤ |n| for some n ≤ n_bound and a among the place's center and 0."""
    boundedness_oracle(place)
    h = place.codomain
    centers = {Fraction(0)}
    if place.gaussian is not None:
        centers.add(place.gaussian[0])
    for a in sorted(centers):
        distance = evaluate(place, monomial_shift(a))
        for n in range(1, n_bound + 1):
            if halo_cmp(h, distance, evaluate(place, n)) != Ordering.GREATER:
                return True
    return False
