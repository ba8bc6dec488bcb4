"""
Harmonious spectra as point sets with the rational-domain topology.

Nothing infinite is materialized: speh_points_of_Z lists a bounded sample and
every other operation works point by point.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import primerange

from . import config
from .classification import equivalent_oracle, is_nonarchimedean, place_class_key
from .errors import DomainMismatch, FactorizationRequired, RangeError, UnsupportedPair, ZeroDenominator
from .halos import halo_cmp
from .ordered_groups import Ordering
from .places import (
    PlaceDescriptor,
    PlaceKind,
    archimedean_z,
    evaluate,
    is_multiplicative_element,
    is_multiplicative_place,
    padic_real,
    residual,
    trivial_on,
)
from .rings import RingElement, RingKind, as_element, ring_mul, zx

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpehPoint:
    """A point of Speh^m: the multiplicative class of place."""
    place: PlaceDescriptor

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpehPoint):
            return NotImplemented
        try:
            return equivalent_oracle(self.place, other.place)
        except UnsupportedPair:
            return False

    def __hash__(self) -> int:
        return hash(place_class_key(self.place))

    def __str__(self) -> str:
        return str(self.place)


@dataclass(frozen=True)
class RationalDomain:
    """
    R(a₁..aₙ / b): |aᵢ| < |b| (strict) or |aᵢ| ≤ |b| ≠ 0, with every divisor
    of b multiplicative. denominator_factors lists the irreducible factors of a
    polynomial b, which cannot be enumerated here.
    """
    ring: RingKind
    numerators: Tuple[RingElement, ...]
    denominator: RingElement
    strict: bool = True
    denominator_factors: Optional[Tuple[RingElement, ...]] = field(default=None)

    def __post_init__(self):
        if self.ring not in (RingKind.Z, RingKind.ZX):
            raise DomainMismatch(f"rational domains live on Z or Z[X], not {self.ring.value}")
        if self.denominator.is_zero:
            raise ZeroDenominator("rational domain with zero denominator")
        for elem in self.numerators + (self.denominator,):
            if elem.ring != self.ring:
                raise DomainMismatch(f"{elem} is not an element of {self.ring.value}")

    def __str__(self) -> str:
        kind = '<' if self.strict else '<='
        return f"R({', '.join(str(a) for a in self.numerators)} {kind} {self.denominator})"


def rational_domain(numerators: Sequence, denominator, strict: bool = True,
                    denominator_factors: Optional[Sequence] = None) -> RationalDomain:
    """Domain over ℤ, or over ℤ[X] when any entry is a coefficient list."""
    entries = list(numerators) + [denominator]
    polynomial = any(isinstance(e, (list, tuple)) or getattr(e, 'ring', None) == RingKind.ZX
                     for e in entries)

    def lift(e) -> RingElement:
        if isinstance(e, RingElement):
            return e if not polynomial or e.ring == RingKind.ZX else zx(e.coeffs)
        if isinstance(e, (list, tuple)):
            return zx(e)
        return zx([e]) if polynomial else as_element(e)

    factors = None
    if denominator_factors is not None:
        factors = tuple(lift(f) for f in denominator_factors)
    return RationalDomain(
        RingKind.ZX if polynomial else RingKind.Z,
        tuple(lift(a) for a in numerators),
        lift(denominator),
        strict,
        factors,
    )


def full_domain(ring: RingKind = RingKind.Z) -> RationalDomain:
    one = as_element(1) if ring == RingKind.Z else zx([1])
    return RationalDomain(ring, (), one)


# Membership

def _divisors(domain: RationalDomain) -> List[RingElement]:
    b = domain.denominator
    if domain.ring == RingKind.Z:
        n = abs(int(b.scalar))
        if n > config.TRIAL_DIVISION_LIMIT:
            raise FactorizationRequired(f"{n} exceeds the trial division limit")
        # d and -d are the same divisor
        return [as_element(d) for d in sympy.divisors(n)]
    if domain.denominator_factors is None:
        raise FactorizationRequired(f"no factor list supplied for {b}")
    divisors = [zx([1])]
    for factor in domain.denominator_factors:
        divisors += [ring_mul(d, factor) for d in divisors]
    return divisors


def _as_place(x) -> PlaceDescriptor:
    return x.place if isinstance(x, SpehPoint) else x


def domain_membership(x, domain: RationalDomain) -> bool:
    place = _as_place(x)
    h = place.codomain
    b_value = evaluate(place, domain.denominator)
    for a in domain.numerators:
        verdict = halo_cmp(h, evaluate(place, a), b_value)
        if domain.strict and verdict != Ordering.LESS:
            return False
        if not domain.strict and verdict == Ordering.GREATER:
            return False

    if is_multiplicative_place(place):
        # every divisor of b is multiplicative exactly when |b| ≠ 0
        return not b_value.is_zero
    return all(is_multiplicative_element(place, d) for d in _divisors(domain))


def domain_intersection(first: RationalDomain, second: RationalDomain) -> RationalDomain:
    """R(f/h) ∩ R(g/k) = R(f·k, g·h / h·k)."""
    if first.ring != second.ring or first.strict != second.strict:
        raise DomainMismatch("intersected domains must share ring and strictness")
    h, k = first.denominator, second.denominator
    factors = None
    if first.denominator_factors is not None and second.denominator_factors is not None:
        factors = first.denominator_factors + second.denominator_factors
    return RationalDomain(
        first.ring,
        tuple(ring_mul(f, k) for f in first.numerators) + tuple(ring_mul(g, h) for g in second.numerators),
        ring_mul(h, k),
        first.strict,
        factors,
    )


def spev_subset_check(x) -> bool:
    """Whether x lies in Spev, i.e. |2(x)| ≤ 1."""
    return is_nonarchimedean(_as_place(x))


# Points of Speh(ℤ)

def speh_points_of_Z(prime_bound: int) -> List[SpehPoint]:
    if prime_bound < 2:
        raise RangeError(f"prime bound {prime_bound} must be at least 2")
    points = [SpehPoint(trivial_on(RingKind.Z))]
    for p in primerange(2, prime_bound + 1):
        points += [SpehPoint(padic_real(int(p))), SpehPoint(residual(int(p)))]
    points.append(SpehPoint(archimedean_z()))
    return points


def enumerate_members(domain: RationalDomain, prime_bound: Optional[int] = None) -> List[SpehPoint]:
    bound = prime_bound or config.prime_bound()
    members = [x for x in speh_points_of_Z(bound) if domain_membership(x, domain)]
    logger.debug(f"{domain}: {len(members)} members up to {bound}")
    return members


def residue_field_at(x) -> str:
    place = _as_place(x)
    if place.kind == PlaceKind.RESIDUAL:
        return f"F_{place.p}"
    if place.kind == PlaceKind.PADIC_REAL or place.kind == PlaceKind.PADIC_TROP:
        return f"Q_{place.p}"
    if place.kind == PlaceKind.ARCHIMEDEAN:
        return 'R'
    if place.kind == PlaceKind.TRIVIAL and place.ring == RingKind.Z:
        return 'Q'
    raise DomainMismatch(f"{place} is not a point of Speh(Z)")


# Berkovich points of ℤ

class BerkovichKind(Enum):
    P_POWER = 'p_power'
    ARCH_POWER = 'arch_power'
    RESIDUAL = 'residual'


@dataclass(frozen=True)
class BerkovichPoint:
    """|.|_p^t (t ≥ 0), |.|_∞^t (0 ≤ t ≤ 1) or the residual point at p."""
    kind: BerkovichKind
    p: Optional[int] = None
    t: Fraction = Fraction(1)

    def __post_init__(self):
        t = Fraction(self.t)
        object.__setattr__(self, 't', t)
        if t < 0 or (self.kind == BerkovichKind.ARCH_POWER and t > 1):
            raise RangeError(f"exponent {t} out of range for {self.kind.value}")
        if self.kind != BerkovichKind.ARCH_POWER and not sympy.isprime(self.p or 0):
            raise RangeError(f"{self.p!r} is not a prime")


def berkovich_to_speh(b: BerkovichPoint) -> SpehPoint:
    if b.kind == BerkovichKind.RESIDUAL:
        return SpehPoint(residual(b.p))
    if not b.t:
        return SpehPoint(trivial_on(RingKind.Z))
    if b.kind == BerkovichKind.P_POWER:
        return SpehPoint(padic_real(b.p))
    return SpehPoint(archimedean_z())
