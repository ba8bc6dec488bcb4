"""
Sections and germs of the structure sheaf on Speh(ℤ), completed rings with
truncated-precision elements, adèles and the tiny-ball condition.

Completed rings are named, not constructed: a p-adic element is a residue
modulo a power of p, a real element a dyadic interval.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import ceil, floor, prod
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from . import config
from .errors import (
    DomainMismatch,
    Inconclusive,
    MixedRings,
    NotIntegral,
    UnrecognizedDomainShape,
)
from .halos import HaloKind, halo_cmp, halo_mul, halo_natural, halo_one
from .ordered_groups import Ordering
from .places import (
    COMPOSITE_KINDS,
    FP_KINDS,
    Z_KINDS,
    PlaceKind,
    evaluate,
    is_catalog,
)
from .rings import RingKind, fpx, ord_p, qx
from .spectra import RationalDomain, SpehPoint, domain_membership, speh_points_of_Z

logger = logging.getLogger(__name__)


class SectionRingKind(Enum):
    LOCALIZED = 'localized'
    PADIC_INTEGERS = 'padic_integers'
    PADIC_FIELD = 'padic_field'
    REAL = 'real'
    RATIONAL = 'rational'
    FINITE_FIELD = 'finite_field'
    PRODUCT = 'product'


@dataclass(frozen=True)
class RingDescriptor:
    kind: SectionRingKind
    p: Optional[int] = None
    m: Optional[int] = None
    factors: Tuple['RingDescriptor', ...] = ()
    topology: Optional[str] = None

    @classmethod
    def localized(cls, m: int) -> 'RingDescriptor':
        if not m:
            raise DomainMismatch("cannot invert 0")
        return cls(SectionRingKind.LOCALIZED, m=abs(m), topology='discrete')

    @classmethod
    def padic_integers(cls, p: int) -> 'RingDescriptor':
        return cls(SectionRingKind.PADIC_INTEGERS, p=p)

    @classmethod
    def padic_field(cls, p: int) -> 'RingDescriptor':
        return cls(SectionRingKind.PADIC_FIELD, p=p)

    @classmethod
    def real(cls) -> 'RingDescriptor':
        return cls(SectionRingKind.REAL)

    @classmethod
    def rational(cls) -> 'RingDescriptor':
        return cls(SectionRingKind.RATIONAL, topology='discrete')

    @classmethod
    def finite_field(cls, p: int) -> 'RingDescriptor':
        return cls(SectionRingKind.FINITE_FIELD, p=p)

    @classmethod
    def product(cls, factors: Sequence['RingDescriptor']) -> 'RingDescriptor':
        flat: List[RingDescriptor] = []
        for factor in factors:
            flat += list(factor.factors) if factor.kind == SectionRingKind.PRODUCT else [factor]
        if len(flat) == 1:
            return flat[0]
        return cls(SectionRingKind.PRODUCT, factors=tuple(flat))

    @property
    def is_padic(self) -> bool:
        return self.kind in (SectionRingKind.PADIC_INTEGERS, SectionRingKind.PADIC_FIELD)

    def __str__(self) -> str:
        if self.kind == SectionRingKind.LOCALIZED:
            return 'Z' if self.m == 1 else f"Z[1/{self.m}]"
        if self.kind == SectionRingKind.PADIC_INTEGERS:
            return f"Z_{self.p}"
        if self.kind == SectionRingKind.PADIC_FIELD:
            return f"Q_{self.p}"
        if self.kind == SectionRingKind.FINITE_FIELD:
            return f"F_{self.p}"
        if self.kind == SectionRingKind.PRODUCT:
            return ' x '.join(str(f) for f in self.factors)
        return 'R' if self.kind == SectionRingKind.REAL else 'Q'


# Sections and germs

def _relevant_primes(domain: RationalDomain) -> List[int]:
    primes = {2}
    for elem in domain.numerators + (domain.denominator,):
        if not elem.is_zero:
            primes.update(sympy.primefactors(abs(int(elem.scalar))))
    return sorted(primes)


def sections_on_domain(domain: RationalDomain) -> RingDescriptor:
    """O~(D) for the canonical domain shapes over ℤ and their disjoint unions."""
    if domain.ring != RingKind.Z:
        raise UnrecognizedDomainShape(f"{domain} is not a domain of Speh(Z)")
    bound = max(_relevant_primes(domain))
    members = [x.place for x in speh_points_of_Z(bound) if domain_membership(x, domain)]
    kinds = {(place.kind, place.p) for place in members}
    primes = [int(p) for p in sympy.primerange(2, bound + 1)]
    has_arch = (PlaceKind.ARCHIMEDEAN, None) in kinds

    if (PlaceKind.TRIVIAL, None) in kinds:
        if not has_arch or any((PlaceKind.PADIC_REAL, p) not in kinds for p in primes):
            raise UnrecognizedDomainShape(f"{domain} meets the trivial point but is not cofinite")
        return RingDescriptor.localized(prod(p for p in primes if (PlaceKind.RESIDUAL, p) not in kinds))

    components: List[RingDescriptor] = []
    for p in primes:
        padic = (PlaceKind.PADIC_REAL, p) in kinds
        residual = (PlaceKind.RESIDUAL, p) in kinds
        if padic and residual:
            components.append(RingDescriptor.padic_integers(p))
        elif padic:
            components.append(RingDescriptor.padic_field(p))
        elif residual:
            raise UnrecognizedDomainShape(f"{domain} isolates the residual point at {p}")
    if has_arch:
        components.append(RingDescriptor.real())
    if not components:
        raise UnrecognizedDomainShape(f"{domain} has no points")
    logger.debug(f"sections on {domain}: {[str(c) for c in components]}")
    return RingDescriptor.product(components)


def germ_at(x) -> RingDescriptor:
    place = x.place if isinstance(x, SpehPoint) else x
    if place.kind == PlaceKind.RESIDUAL:
        return RingDescriptor.padic_integers(place.p)
    if place.kind in (PlaceKind.PADIC_REAL, PlaceKind.PADIC_TROP):
        return RingDescriptor.padic_field(place.p)
    if place.kind == PlaceKind.ARCHIMEDEAN:
        return RingDescriptor.real()
    if place.kind == PlaceKind.TRIVIAL and place.ring == RingKind.Z:
        return RingDescriptor.rational()
    raise DomainMismatch(f"{place} is not a point of Speh(Z)")


# Completed elements

@dataclass(frozen=True)
class CompletedElement:
    """
    p-adic integers: residue mod p^precision (absolute precision).
    p-adic field: p^valuation · unit, unit known mod p^precision.
    Reals: [lower, upper] on the grid 2^-precision. Exact rings: value.
    """
    ring: RingDescriptor
    value: Optional[Fraction] = None
    residue: int = 0
    precision: int = 0
    valuation: int = 0
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    components: Tuple['CompletedElement', ...] = ()

    def __str__(self) -> str:
        kind = self.ring.kind
        if kind == SectionRingKind.PADIC_INTEGERS:
            return f"{self.residue} + O({self.ring.p}^{self.precision})"
        if kind == SectionRingKind.PADIC_FIELD:
            return f"{self.ring.p}^{self.valuation}·({self.residue} + O({self.ring.p}^{self.precision}))"
        if kind == SectionRingKind.REAL:
            return f"[{self.lower}, {self.upper}]"
        if kind == SectionRingKind.PRODUCT:
            return f"({', '.join(str(c) for c in self.components)})"
        return str(self.value)


def _unit_residue(q: Fraction, p: int, k: int) -> int:
    modulus = p ** k
    return q.numerator * pow(q.denominator, -1, modulus) % modulus if k else 0


def _padic_field_element(ring: RingDescriptor, q: Fraction, k: int) -> CompletedElement:
    if not q:
        # zero is only known to absolute precision k
        return CompletedElement(ring, residue=0, precision=0, valuation=k)
    v = ord_p(q, ring.p)
    return CompletedElement(ring, residue=_unit_residue(q / Fraction(ring.p) ** v, ring.p, k),
                            precision=k, valuation=v)


def _round_out(ring: RingDescriptor, lower: Fraction, upper: Fraction, k: int) -> CompletedElement:
    scale = 2 ** k
    return CompletedElement(
        ring,
        lower=Fraction(floor(lower * scale), scale),
        upper=Fraction(ceil(upper * scale), scale),
        precision=k,
    )


def completion_map(q, target: RingDescriptor, precision: Optional[int] = None) -> CompletedElement:
    """Image of a rational in a completed (or exact) section ring."""
    q = Fraction(q)
    k = config.DEFAULT_PRECISION if precision is None else precision
    kind = target.kind
    if kind == SectionRingKind.PADIC_INTEGERS:
        if q.denominator % target.p == 0:
            raise NotIntegral(f"{q} has {target.p} in its denominator")
        return CompletedElement(target, residue=_unit_residue(q, target.p, k), precision=k,
                                valuation=min(ord_p(q, target.p), k) if q else k)
    if kind == SectionRingKind.PADIC_FIELD:
        return _padic_field_element(target, q, k)
    if kind == SectionRingKind.REAL:
        return _round_out(target, q, q, k)
    if kind == SectionRingKind.RATIONAL:
        return CompletedElement(target, value=q)
    if kind == SectionRingKind.LOCALIZED:
        stray = [p for p in sympy.primefactors(q.denominator) if target.m % p]
        if stray:
            raise NotIntegral(f"{q} is not in {target}: {stray} not inverted")
        return CompletedElement(target, value=q)
    if kind == SectionRingKind.PRODUCT:
        return CompletedElement(target, components=tuple(
            completion_map(q, factor, k) for factor in target.factors
        ))
    raise DomainMismatch(f"{target} is not a completion of Z[1/m]")


def _same_ring(x: CompletedElement, y: CompletedElement) -> RingDescriptor:
    if x.ring != y.ring:
        raise MixedRings(f"{x.ring} and {y.ring}")
    return x.ring


def _padic_int_element(ring: RingDescriptor, residue: int, k: int) -> CompletedElement:
    residue %= ring.p ** k
    valuation = min(ord_p(residue, ring.p), k) if residue else k
    return CompletedElement(ring, residue=residue, precision=k, valuation=valuation)


def _normalize_field(ring: RingDescriptor, scaled: int, base: int, absolute: int) -> CompletedElement:
    """p^base · scaled known mod p^absolute."""
    p = ring.p
    digits = absolute - base
    scaled %= p ** max(digits, 0)
    if digits <= 0 or not scaled:
        return CompletedElement(ring, residue=0, precision=0, valuation=absolute)
    t = ord_p(scaled, p)
    k = digits - t
    return CompletedElement(ring, residue=(scaled // p ** t) % p ** k, precision=k, valuation=base + t)


def completed_add(x: CompletedElement, y: CompletedElement) -> CompletedElement:
    ring = _same_ring(x, y)
    kind = ring.kind
    if kind == SectionRingKind.PADIC_INTEGERS:
        return _padic_int_element(ring, x.residue + y.residue, min(x.precision, y.precision))
    if kind == SectionRingKind.PADIC_FIELD:
        p = ring.p
        base = min(x.valuation, y.valuation)
        absolute = min(x.valuation + x.precision, y.valuation + y.precision)
        scaled = x.residue * p ** (x.valuation - base) + y.residue * p ** (y.valuation - base)
        return _normalize_field(ring, scaled, base, absolute)
    if kind == SectionRingKind.REAL:
        return _round_out(ring, x.lower + y.lower, x.upper + y.upper, min(x.precision, y.precision))
    if kind == SectionRingKind.PRODUCT:
        return CompletedElement(ring, components=tuple(
            completed_add(a, b) for a, b in zip(x.components, y.components)
        ))
    return CompletedElement(ring, value=x.value + y.value)


def completed_mul(x: CompletedElement, y: CompletedElement) -> CompletedElement:
    ring = _same_ring(x, y)
    kind = ring.kind
    if kind == SectionRingKind.PADIC_INTEGERS:
        # residues stand for absolute classes; the product is good to min(k) digits
        return _padic_int_element(ring, x.residue * y.residue, min(x.precision, y.precision))
    if kind == SectionRingKind.PADIC_FIELD:
        k = min(x.precision, y.precision)
        return CompletedElement(ring, residue=(x.residue * y.residue) % ring.p ** k,
                                precision=k, valuation=x.valuation + y.valuation)
    if kind == SectionRingKind.REAL:
        corners = [a * b for a in (x.lower, x.upper) for b in (y.lower, y.upper)]
        return _round_out(ring, min(corners), max(corners), min(x.precision, y.precision))
    if kind == SectionRingKind.PRODUCT:
        return CompletedElement(ring, components=tuple(
            completed_mul(a, b) for a, b in zip(x.components, y.components)
        ))
    return CompletedElement(ring, value=x.value * y.value)


def completed_neg(x: CompletedElement) -> CompletedElement:
    ring = x.ring
    kind = ring.kind
    if kind == SectionRingKind.PADIC_INTEGERS:
        return _padic_int_element(ring, -x.residue, x.precision)
    if kind == SectionRingKind.PADIC_FIELD:
        modulus = ring.p ** x.precision
        return CompletedElement(ring, residue=-x.residue % modulus, precision=x.precision,
                                valuation=x.valuation)
    if kind == SectionRingKind.REAL:
        return CompletedElement(ring, lower=-x.upper, upper=-x.lower, precision=x.precision)
    if kind == SectionRingKind.PRODUCT:
        return CompletedElement(ring, components=tuple(completed_neg(c) for c in x.components))
    return CompletedElement(ring, value=-x.value)


def completed_valuation(x: CompletedElement) -> int:
    if not x.ring.is_padic:
        raise DomainMismatch(f"{x.ring} carries no p-adic valuation")
    return x.valuation


def completed_agrees(x: CompletedElement, q) -> bool:
    """Whether the exact rational q is compatible with the truncated element x."""
    q = Fraction(q)
    kind = x.ring.kind
    if kind == SectionRingKind.REAL:
        return x.lower <= q <= x.upper
    if kind == SectionRingKind.PADIC_INTEGERS:
        return completion_map(q, x.ring, x.precision).residue == x.residue
    if kind == SectionRingKind.PADIC_FIELD:
        p = x.ring.p
        absolute = x.valuation + x.precision
        if not q:
            return not x.precision
        v = ord_p(q, p)
        if v >= absolute:
            return not x.precision
        if v != x.valuation:
            return False
        return _unit_residue(q / Fraction(p) ** v, p, x.precision) == x.residue
    if kind == SectionRingKind.PRODUCT:
        return all(completed_agrees(c, q) for c in x.components)
    return x.value == q


# Adèles

@dataclass(frozen=True)
class AdeleElement:
    """Restricted-product element: finitely many ℚ_p components, a real part, ℤ_p elsewhere."""
    exceptional: Tuple[Tuple[int, CompletedElement], ...]
    real: CompletedElement
    tail: str = 'integral'

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(p for p, _ in self.exceptional)

    def component(self, p: int) -> Optional[CompletedElement]:
        return dict(self.exceptional).get(p)


def adele_germ_assemble(exceptional: Dict[int, object], real, precision: Optional[int] = None) -> AdeleElement:
    """
    Args:
        exceptional: prime -> rational or ℚ_p CompletedElement.
        real: rational, (lower, upper) pair, or REAL CompletedElement.
        precision: digits used for rationals.

    Returns:
        The adèle with those components and integral tail.
    """
    k = config.DEFAULT_PRECISION if precision is None else precision
    components = []
    for p, value in sorted(exceptional.items()):
        if not sympy.isprime(p):
            raise DomainMismatch(f"{p} is not a prime")
        if not isinstance(value, CompletedElement):
            value = completion_map(value, RingDescriptor.padic_field(p), k)
        if value.ring != RingDescriptor.padic_field(p):
            raise MixedRings(f"component at {p} lives in {value.ring}")
        components.append((p, value))
    if isinstance(real, tuple):
        lower, upper = Fraction(real[0]), Fraction(real[1])
        if lower > upper:
            raise DomainMismatch(f"empty real interval [{lower}, {upper}]")
        real = _round_out(RingDescriptor.real(), lower, upper, k)
    elif not isinstance(real, CompletedElement):
        real = completion_map(real, RingDescriptor.real(), k)
    return AdeleElement(tuple(components), real)


def adele_diagonal(q, m: int, precision: Optional[int] = None) -> AdeleElement:
    """Diagonal image of q ∈ ℤ[1/m], listed at the primes of m."""
    q = Fraction(q)
    completion_map(q, RingDescriptor.localized(m))
    k = config.DEFAULT_PRECISION if precision is None else precision
    return adele_germ_assemble(
        {int(p): q for p in sympy.primefactors(abs(m))}, q, k,
    )


def _one_sided(x: CompletedElement, additive: bool) -> Optional[CompletedElement]:
    """x combined with an unknown element of ℤ_p, or None when the result is integral."""
    if x.valuation >= 0:
        return None
    if additive:
        return _normalize_field(x.ring, x.residue, x.valuation, 0)
    return CompletedElement(x.ring, residue=0, precision=0, valuation=x.valuation)


def _adele_combine(x: AdeleElement, y: AdeleElement, op, additive: bool) -> AdeleElement:
    components = []
    for p in sorted(set(x.primes) | set(y.primes)):
        a, b = x.component(p), y.component(p)
        if a is not None and b is not None:
            value = op(a, b)
        else:
            value = _one_sided(a if a is not None else b, additive)
        if value is not None:
            components.append((p, value))
    return AdeleElement(tuple(components), op(x.real, y.real))


def adele_add(x: AdeleElement, y: AdeleElement) -> AdeleElement:
    return _adele_combine(x, y, completed_add, additive=True)


def adele_mul(x: AdeleElement, y: AdeleElement) -> AdeleElement:
    return _adele_combine(x, y, completed_mul, additive=False)


# Tiny balls

class TinyBallDisjunct(Enum):
    LARGE_ELEMENT = 'large_element'
    DISCRETE = 'discrete'


@dataclass(frozen=True)
class TinyBallReport:
    disjunct: TinyBallDisjunct
    witness: str
    ring_topology: bool = True


def _candidates(place) -> List[Tuple[str, object]]:
    if place.kind in FP_KINDS:
        p = place.p
        modulus = fpx(p, place.modulus)
        return [('X', fpx(p, [0, 1])), (f"({modulus})", modulus)]
    out = [(str(n), n) for n in range(2, 5)]
    if place.p is not None:
        out.append((str(place.p), place.p))
    if place.kind not in Z_KINDS:
        out.append(('X', qx([0, 1])))
    return out


def tiny_ball_report(place) -> TinyBallReport:
    """Which alternative of the tiny-ball criterion holds at place.

    A candidate v works directly when |v| > 2, and through u = 1/v when
    2·|v| < 1, since |1/v| = 1/|v| for multiplicative places.
    """
    if not is_catalog(place) or place.kind in COMPOSITE_KINDS:
        raise Inconclusive(f"{place} is not a multiplicative catalog place")
    h = place.codomain
    if h.kind == HaloKind.TRIVIAL or (place.kind == PlaceKind.PADIC_POWER and not place.t):
        return TinyBallReport(TinyBallDisjunct.DISCRETE, '1')
    one, two = halo_one(h), halo_natural(h, 2)
    for label, v in _candidates(place):
        value = evaluate(place, v)
        if value.is_zero:
            continue
        if halo_cmp(h, value, two) == Ordering.GREATER:
            return TinyBallReport(TinyBallDisjunct.LARGE_ELEMENT, label)
        if halo_cmp(h, halo_mul(h, two, value), one) == Ordering.LESS:
            return TinyBallReport(TinyBallDisjunct.LARGE_ELEMENT, f"1/{label}")
    raise Inconclusive(f"no element of {place} witnesses either alternative")
