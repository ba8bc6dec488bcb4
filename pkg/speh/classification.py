"""
Property checkers, the equivalence oracle and the classification of places on ℤ.

Checkers are sampled verifications: they return the first counterexample
among the supplied elements, never a proof.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from sympy import primerange

from . import config
from .errors import Inconclusive, UnsupportedPair, UnsupportedPlace
from .halos import halo_add, halo_cmp, halo_max, halo_mul, halo_one, halo_pow, halo_zero
from .ordered_groups import Ordering
from .places import (
    COMPOSITE_KINDS,
    IdealKind,
    MajorKind,
    PlaceKind,
    evaluate,
    is_catalog,
    kernel,
    restrict_to_Z,
)
from .rings import CHAR_P_RINGS, RingKind, as_element, ord_p, ring_add, ring_mul, ring_neg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    counterexample: Optional[tuple] = None

    @classmethod
    def ok(cls) -> 'CheckResult':
        return cls(True)

    @classmethod
    def fail(cls, *elements) -> 'CheckResult':
        return cls(False, tuple(elements))

    def __bool__(self) -> bool:
        return self.passed


def _le(place, x, y) -> bool:
    return halo_cmp(place.codomain, x, y) != Ordering.GREATER


def check_multiplicative_on(place, pairs: Iterable[Tuple]) -> CheckResult:
    h = place.codomain
    for a, b in pairs:
        if evaluate(place, ring_mul(a, b)) != halo_mul(h, evaluate(place, a), evaluate(place, b)):
            return CheckResult.fail(a, b)
    return CheckResult.ok()


def check_power_multiplicative_on(place, elems: Iterable, N: int) -> CheckResult:
    h = place.codomain
    for a in elems:
        value = evaluate(place, a)
        power = as_element(a)
        for n in range(2, N + 1):
            power = ring_mul(power, a)
            if evaluate(place, power) != halo_pow(h, value, n):
                return CheckResult.fail(a, n)
    return CheckResult.ok()


def check_square_multiplicative_on(place, elems: Iterable) -> CheckResult:
    return check_power_multiplicative_on(place, elems, 2)


def check_seminorm_axioms_on(place, pairs: Iterable[Tuple]) -> CheckResult:
    """|0| = 0, |1| = 1, subadditivity and submultiplicativity."""
    h = place.codomain
    if evaluate(place, 0) != halo_zero(h):
        return CheckResult.fail(0)
    if evaluate(place, 1) != halo_one(h):
        return CheckResult.fail(1)
    for a, b in pairs:
        va, vb = evaluate(place, a), evaluate(place, b)
        if not _le(place, evaluate(place, ring_add(a, b)), halo_add(h, va, vb)):
            return CheckResult.fail(a, b)
        if not _le(place, evaluate(place, ring_mul(a, b)), halo_mul(h, va, vb)):
            return CheckResult.fail(a, b)
    return CheckResult.ok()


def is_nonarchimedean(place) -> bool:
    h = place.codomain
    return halo_cmp(h, evaluate(place, 2), halo_one(h)) != Ordering.GREATER


def check_ultrametric_on(place, pairs: Iterable[Tuple]) -> CheckResult:
    h = place.codomain
    for a, b in pairs:
        bound = halo_max(h, evaluate(place, a), evaluate(place, b))
        if not _le(place, evaluate(place, ring_add(a, b)), bound):
            return CheckResult.fail(a, b)
    return CheckResult.ok()


def check_prearchimedean_on(place, pairs: Iterable[Tuple]) -> CheckResult:
    h = place.codomain
    factor = halo_max(h, evaluate(place, 2), halo_one(h))
    for a, b in pairs:
        bound = halo_mul(h, factor, halo_max(h, evaluate(place, a), evaluate(place, b)))
        if not _le(place, evaluate(place, ring_add(a, b)), bound):
            return CheckResult.fail(a, b)
    return CheckResult.ok()


def negation_symmetry_check(place, elems: Iterable) -> CheckResult:
    for a in elems:
        if evaluate(place, ring_neg(a)) != evaluate(place, a):
            return CheckResult.fail(a)
    return CheckResult.ok()


def minus_one_check(place) -> CheckResult:
    """|-1| ≥ 1."""
    h = place.codomain
    if halo_cmp(h, evaluate(place, -1), halo_one(h)) == Ordering.LESS:
        return CheckResult.fail(-1)
    return CheckResult.ok()


def mult_bounded_by(place1, place2, triples: Iterable[Tuple]) -> CheckResult:
    """|a|₂|c|₂ ≤ |b|₂ ⇒ |a|₁|c|₁ ≤ |b|₁ on every sampled triple."""
    h1, h2 = place1.codomain, place2.codomain
    for a, b, c in triples:
        lhs2 = halo_mul(h2, evaluate(place2, a), evaluate(place2, c))
        if halo_cmp(h2, lhs2, evaluate(place2, b)) == Ordering.GREATER:
            continue
        lhs1 = halo_mul(h1, evaluate(place1, a), evaluate(place1, c))
        if halo_cmp(h1, lhs1, evaluate(place1, b)) == Ordering.GREATER:
            return CheckResult.fail(a, b, c)
    return CheckResult.ok()


# Equivalence

def _conjugate_class(place) -> Tuple[Fraction, Fraction]:
    re, im = place.gaussian
    return re, abs(im)


def place_class_key(place) -> tuple:
    """Key of the multiplicative equivalence class; centers are kept for line places."""
    if not is_catalog(place):
        raise UnsupportedPair(f"{place} has no classification table entry")
    kind = place.kind
    if kind == PlaceKind.TRIVIAL:
        if place.ring in CHAR_P_RINGS:
            return ('char_p', place.ring.value, place.p, 'trivial')
        family = 'Z' if place.ring in (RingKind.Z, RingKind.Q) else 'X'
        return (family, 'trivial')
    if kind in (PlaceKind.PADIC_TROP, PlaceKind.PADIC_REAL):
        return ('Z', 'padic', place.p)
    if kind == PlaceKind.PADIC_POWER:
        return ('Z', 'padic', place.p) if place.t else ('Z', 'trivial')
    if kind == PlaceKind.ARCHIMEDEAN:
        return ('Z', 'arch')
    if kind == PlaceKind.RESIDUAL:
        return ('Z', 'residual', place.p)
    if kind in COMPOSITE_KINDS:
        return ('Z', kind.value, place.m)
    if kind in (PlaceKind.FP_RESIDUAL, PlaceKind.FP_PADIC):
        return ('X', kind.value, place.p, place.modulus)
    if kind == PlaceKind.PADIC_EVAL:
        return ('X', 'eval', place.p, place.center)
    if kind == PlaceKind.GAUSS_POINT:
        return ('X', 'gauss', place.p, place.radius_exp)
    if kind == PlaceKind.HK_CASE4:
        return ('X', 'case4', place.p, place.major.kind.value)
    if kind in (PlaceKind.ARCH_EVAL, PlaceKind.ARCH_INFINITESIMAL):
        return ('X', kind.value, _conjugate_class(place))
    if kind == PlaceKind.ARCH_INFINITY:
        return ('X', 'arch_infinity')
    raise UnsupportedPair(f"{place} has no classification table entry")


def _same_disc(p: int, a, b, radius_exp) -> bool:
    return a == b or -ord_p(a - b, p) <= radius_exp


def equivalent_oracle(place1, place2) -> bool:
    key1, key2 = place_class_key(place1), place_class_key(place2)
    if key1[0] != key2[0] or (key1[0] == 'char_p' and key1[1:3] != key2[1:3]):
        raise UnsupportedPair(f"{place1} and {place2} live on different rings")
    if key1 != key2:
        return False
    if place1.kind == PlaceKind.GAUSS_POINT and place2.kind == PlaceKind.GAUSS_POINT:
        return _same_disc(place1.p, place1.center, place2.center, place1.radius_exp)
    if place1.kind == PlaceKind.HK_CASE4 and place2.kind == PlaceKind.HK_CASE4:
        major1, major2 = place1.major, place2.major
        if major1.kind == MajorKind.EMPTY:
            return True
        if major1.kind == MajorKind.ALL:
            return place1.center == place2.center
        if ord_p(major1.bound, place1.p) != ord_p(major2.bound, place2.p):
            return False
        return _same_disc(place1.p, place1.center, place2.center, -ord_p(major1.bound, place1.p))
    return True


# Classification on ℤ

class ZClassTag(Enum):
    TRIVIAL = 'trivial'
    PADIC = 'padic'
    RESIDUAL = 'residual'
    ARCHIMEDEAN = 'archimedean'


@dataclass(frozen=True)
class ZClass:
    tag: ZClassTag
    p: Optional[int] = None

    def __str__(self) -> str:
        return self.tag.value if self.p is None else f"{self.tag.value}({self.p})"


def classify_on_Z(place, prime_bound: Optional[int] = None) -> ZClass:
    """Kernel, then |2|, then a bounded search for a prime with |p| < 1."""
    bound = prime_bound or config.prime_bound()
    catalog = is_catalog(place)
    if catalog:
        place = restrict_to_Z(place)
    if catalog and place.kind in COMPOSITE_KINDS:
        raise UnsupportedPlace(f"{place} is not multiplicative")
    h = place.codomain
    one = halo_one(h)

    if catalog:
        ideal = kernel(place)
        if ideal.kind == IdealKind.PRINCIPAL_INT:
            return ZClass(ZClassTag.RESIDUAL, int(ideal.generator))
    else:
        for p in primerange(2, bound + 1):
            if evaluate(place, p).is_zero:
                return ZClass(ZClassTag.RESIDUAL, int(p))

    if halo_cmp(h, evaluate(place, 2), one) == Ordering.GREATER:
        return ZClass(ZClassTag.ARCHIMEDEAN)

    for p in primerange(2, bound + 1):
        if halo_cmp(h, evaluate(place, int(p)), one) == Ordering.LESS:
            return ZClass(ZClassTag.PADIC, int(p))

    if not catalog:
        raise Inconclusive(f"no prime up to {bound} separates {place} from the trivial norm")
    logger.debug(f"{place}: no prime up to {bound} has |p| < 1")
    return ZClass(ZClassTag.TRIVIAL)


def increasing_on_naturals(place, upto: int) -> CheckResult:
    """|n| ≤ |n+1| for 1 ≤ n < upto."""
    h = place.codomain
    previous = evaluate(place, 1)
    for n in range(2, upto + 1):
        current = evaluate(place, n)
        if halo_cmp(h, previous, current) == Ordering.GREATER:
            return CheckResult.fail(n - 1, n)
        previous = current
    return CheckResult.ok()


def sorted_pairs(elems: Sequence) -> Iterable[Tuple]:
    for i, a in enumerate(elems):
        for b in elems[i:]:
            yield a, b
