"""
Catalog of generalized seminorms ("places") on ℤ, ℚ, 𝔽_p[X] and ℚ[X].

A PlaceDescriptor is symbolic: evaluate() dispatches on its kind and computes
the exact value in the declared codomain halo.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import sympy

from .errors import (
    DomainMismatch,
    InsufficientFilterDepth,
    RangeError,
    ReducibleModulus,
    UnsupportedPlace,
)
from .halos import HaloDescriptor, HaloValue, halo_mul, halo_one, halo_zero
from .ordered_groups import GroupElement, OrderedGroupDescriptor
from .rings import (
    CHAR_P_RINGS,
    Coeffs,
    GaussianRational,
    RingElement,
    RingKind,
    as_element,
    coerce,
    evaluate_at,
    fp_order,
    fp_poly,
    gaussian_taylor_norms,
    gaussian_value_norm,
    from_poly,
    has_root_in_closed_disc,
    ord_p,
    ring_mul,
    taylor_coefficients,
    to_poly,
    trim,
)
from .surds import Surd

logger = logging.getLogger(__name__)


class PlaceKind(Enum):
    TRIVIAL = 'trivial'
    PADIC_TROP = 'padic_trop'
    PADIC_REAL = 'padic_real'
    PADIC_POWER = 'padic_power'
    ARCHIMEDEAN = 'archimedean'
    RESIDUAL = 'residual'
    COMPOSITE_ADIC = 'composite_adic'
    COMPOSITE_RESIDUAL = 'composite_residual'
    FP_RESIDUAL = 'fp_residual'
    FP_PADIC = 'fp_padic'
    PADIC_EVAL = 'padic_eval'
    GAUSS_POINT = 'gauss_point'
    HK_IMMEDIATE = 'hk_immediate'
    HK_CASE4 = 'hk_case4'
    ARCH_EVAL = 'arch_eval'
    ARCH_INFINITESIMAL = 'arch_infinitesimal'
    ARCH_INFINITY = 'arch_infinity'
    HUBER_QUOTIENT = 'huber_quotient'


Z_KINDS = (
    PlaceKind.PADIC_TROP, PlaceKind.PADIC_REAL, PlaceKind.PADIC_POWER, PlaceKind.ARCHIMEDEAN,
    PlaceKind.RESIDUAL, PlaceKind.COMPOSITE_ADIC, PlaceKind.COMPOSITE_RESIDUAL,
)
PADIC_LINE_KINDS = (
    PlaceKind.PADIC_EVAL, PlaceKind.GAUSS_POINT, PlaceKind.HK_IMMEDIATE, PlaceKind.HK_CASE4,
)
ARCH_LINE_KINDS = (
    PlaceKind.ARCH_EVAL, PlaceKind.ARCH_INFINITESIMAL, PlaceKind.ARCH_INFINITY,
)
FP_KINDS = (PlaceKind.FP_RESIDUAL, PlaceKind.FP_PADIC)
COMPOSITE_KINDS = (PlaceKind.COMPOSITE_ADIC, PlaceKind.COMPOSITE_RESIDUAL)

_LINE_RINGS = (RingKind.Z, RingKind.Q, RingKind.ZX, RingKind.QX, RingKind.QXFRAC)


class MajorKind(Enum):
    EMPTY = 'empty'
    ALL = 'all'
    CUT = 'cut'


@dataclass(frozen=True)
class MajorSubset:
    """The major subset M ⊂ |ℚ*| of a case-4 point; CUT(b) sits just above |b|."""
    kind: MajorKind
    bound: Optional[Fraction] = None

    def __post_init__(self):
        if (self.kind == MajorKind.CUT) != (self.bound is not None):
            raise RangeError("only a cut major subset carries a bound")
        if self.bound is not None and not self.bound:
            raise RangeError("the cut bound must be a nonzero rational")


class DiscSequence:
    """
    Nested closed discs B(c_k, p^r_k) defining an immediate (case 3) point.

    A finite prefix is stored; an optional extension callable produces disc k
    on demand and results are cached, so an instance must be externally
    synchronized when shared between threads.
    """

    def __init__(self, p: int, prefix: Sequence[Tuple], extension: Optional[Callable] = None,
                 max_depth: int = 64):
        self.p = p
        self.prefix = tuple((Fraction(c), Fraction(r)) for c, r in prefix)
        self.extension = extension
        self.max_depth = max_depth
        self._discs: List[Tuple[Fraction, Fraction]] = []
        if not self.prefix:
            raise RangeError("a disc sequence needs at least one disc")
        for disc in self.prefix:
            self._append(disc)

    def _append(self, disc: Tuple[Fraction, Fraction]) -> None:
        if self._discs:
            c0, r0 = self._discs[-1]
            c1, r1 = disc
            if r1 > r0:
                raise RangeError(f"disc radius p^{r1} exceeds the previous p^{r0}")
            if c1 != c0 and -ord_p(c1 - c0, self.p) > r0:
                raise RangeError(f"disc centered at {c1} leaves the previous disc")
        self._discs.append(disc)

    def disc(self, k: int) -> Optional[Tuple[Fraction, Fraction]]:
        while len(self._discs) <= k:
            if self.extension is None or len(self._discs) >= self.max_depth:
                return None
            c, r = self.extension(len(self._discs))
            self._append((Fraction(c), Fraction(r)))
        return self._discs[k]

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        k = 0
        while True:
            disc = self.disc(k)
            if disc is None:
                return
            yield disc
            k += 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiscSequence) and self.p == other.p
            and self.prefix == other.prefix and self.extension is other.extension
        )

    def __hash__(self) -> int:
        return hash((self.p, self.prefix))

    def __repr__(self) -> str:
        return f"DiscSequence(p={self.p}, prefix={len(self.prefix)} discs)"


@dataclass(frozen=True)
class PlaceDescriptor:
    kind: PlaceKind
    p: Optional[int] = None
    m: Optional[int] = None
    t: Optional[Fraction] = None
    ring: Optional[RingKind] = None
    modulus: Optional[Coeffs] = None
    center: Optional[Fraction] = None
    gaussian: Optional[GaussianRational] = None
    radius_exp: Optional[Fraction] = None
    major: Optional[MajorSubset] = None
    sequence: Optional[DiscSequence] = None
    inner: Optional['PlaceDescriptor'] = None

    @property
    def codomain(self) -> HaloDescriptor:
        return codomain_of(self)

    def __str__(self) -> str:
        params = []
        for name in ('ring', 'p', 'm', 't', 'modulus', 'center', 'gaussian', 'radius_exp', 'major'):
            value = getattr(self, name)
            if value is not None:
                params.append(f"{name}={getattr(value, 'value', value)}")
        if self.inner is not None:
            params.append(f"inner={self.inner}")
        return f"{self.kind.value}({', '.join(params)})"


@dataclass(frozen=True, eq=False)
class OpaquePlace:
    """A caller-supplied seminorm outside the catalog (used for test doubles)."""
    label: str
    codomain: HaloDescriptor
    function: Callable[[RingElement], HaloValue]
    domain: Tuple[RingKind, ...] = (RingKind.Z,)
    multiplicative: Optional[bool] = None

    def __str__(self) -> str:
        return f"opaque({self.label})"


# Constructors

def _prime(p) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not sympy.isprime(p):
        raise RangeError(f"{p!r} is not a prime")
    return p


def _composite(m) -> int:
    if not isinstance(m, int) or m < 4 or sympy.isprime(m):
        raise RangeError(f"{m!r} is not a composite integer")
    return m


def _gaussian(a) -> GaussianRational:
    if isinstance(a, tuple):
        re, im = a
        return Fraction(re), Fraction(im)
    return Fraction(a), Fraction(0)


def _irreducible_modulus(p: int, modulus: Sequence) -> Coeffs:
    coeffs = [int(c) % p for c in modulus]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) < 2:
        raise ReducibleModulus(f"modulus {modulus} has degree < 1 over F_{p}")
    # monic representative
    inverse = pow(coeffs[-1], -1, p)
    coeffs = [c * inverse % p for c in coeffs]
    if not fp_poly(p, coeffs).is_irreducible:
        raise ReducibleModulus(f"{fp_poly(p, coeffs).as_expr()} factors over F_{p}")
    return trim(coeffs)


def trivial_on(ring: RingKind, p: Optional[int] = None) -> PlaceDescriptor:
    if ring in CHAR_P_RINGS:
        _prime(p)
    else:
        p = None
    return PlaceDescriptor(PlaceKind.TRIVIAL, ring=ring, p=p)


def padic_trop(p: int) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.PADIC_TROP, p=_prime(p))


def padic_real(p: int) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.PADIC_REAL, p=_prime(p))


def padic_power(p: int, t) -> PlaceDescriptor:
    t = Fraction(t)
    if t < 0:
        raise RangeError(f"exponent {t} must be nonnegative")
    return PlaceDescriptor(PlaceKind.PADIC_POWER, p=_prime(p), t=t)


def archimedean_z() -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.ARCHIMEDEAN)


def residual(p: int) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.RESIDUAL, p=_prime(p))


def composite_adic(m: int) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.COMPOSITE_ADIC, m=_composite(m))


def composite_residual(m: int) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.COMPOSITE_RESIDUAL, m=_composite(m))


def fp_residual(p: int, modulus: Sequence) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.FP_RESIDUAL, p=_prime(p), modulus=_irreducible_modulus(p, modulus))


def fp_padic(p: int, modulus: Sequence) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.FP_PADIC, p=_prime(p), modulus=_irreducible_modulus(p, modulus))


def padic_eval(p: int, a) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.PADIC_EVAL, p=_prime(p), center=Fraction(a))


def gauss_point(p: int, a, r) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.GAUSS_POINT, p=_prime(p), center=Fraction(a), radius_exp=Fraction(r))


def hk_immediate(sequence: DiscSequence) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.HK_IMMEDIATE, p=_prime(sequence.p), sequence=sequence)


def hk_case4(p: int, a, major: MajorSubset) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.HK_CASE4, p=_prime(p), center=Fraction(a), major=major)


def arch_eval(a) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.ARCH_EVAL, gaussian=_gaussian(a))


def arch_infinitesimal(a) -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.ARCH_INFINITESIMAL, gaussian=_gaussian(a))


def arch_infinity() -> PlaceDescriptor:
    return PlaceDescriptor(PlaceKind.ARCH_INFINITY)


def huber_quotient(inner: PlaceDescriptor) -> PlaceDescriptor:
    """inner composed with the projection that forgets the q-coordinate."""
    if inner.kind != PlaceKind.ARCH_INFINITESIMAL:
        raise UnsupportedPlace(f"no infinitesimal coordinate to collapse in {inner}")
    return PlaceDescriptor(PlaceKind.HUBER_QUOTIENT, inner=inner)


# Codomains

def padic_group(p: int) -> OrderedGroupDescriptor:
    return OrderedGroupDescriptor.of(str(p))


Q_GROUP = OrderedGroupDescriptor.of('q')


def case4_group(place: PlaceDescriptor) -> OrderedGroupDescriptor:
    if place.major.kind == MajorKind.CUT:
        return OrderedGroupDescriptor.of(str(place.p), 'q')
    return OrderedGroupDescriptor.of('q', str(place.p))


def fp_group(place: PlaceDescriptor) -> OrderedGroupDescriptor:
    return OrderedGroupDescriptor.of(f"{to_poly(place.modulus).as_expr()} mod {place.p}")


def codomain_of(place: PlaceDescriptor) -> HaloDescriptor:
    kind = place.kind
    if kind in (PlaceKind.TRIVIAL, PlaceKind.RESIDUAL, PlaceKind.COMPOSITE_RESIDUAL,
                PlaceKind.FP_RESIDUAL):
        return HaloDescriptor.trivial()
    if kind in (PlaceKind.PADIC_REAL, PlaceKind.ARCHIMEDEAN, PlaceKind.COMPOSITE_ADIC):
        return HaloDescriptor.rationals()
    if kind in (PlaceKind.PADIC_TROP, PlaceKind.PADIC_POWER, PlaceKind.PADIC_EVAL,
                PlaceKind.GAUSS_POINT, PlaceKind.HK_IMMEDIATE):
        return HaloDescriptor.tropical(padic_group(place.p))
    if kind == PlaceKind.FP_PADIC:
        return HaloDescriptor.tropical(fp_group(place))
    if kind == PlaceKind.HK_CASE4:
        return HaloDescriptor.tropical(case4_group(place))
    if kind in (PlaceKind.ARCH_EVAL, PlaceKind.HUBER_QUOTIENT):
        return HaloDescriptor.surds()
    return HaloDescriptor.lex(HaloDescriptor.tropical(Q_GROUP), HaloDescriptor.surds())


def domain_rings(place) -> Tuple[RingKind, ...]:
    if isinstance(place, OpaquePlace):
        return place.domain
    kind = place.kind
    if kind == PlaceKind.TRIVIAL:
        return (place.ring,)
    if kind in (PlaceKind.PADIC_TROP, PlaceKind.PADIC_REAL, PlaceKind.PADIC_POWER,
                PlaceKind.ARCHIMEDEAN):
        return (RingKind.Z, RingKind.Q)
    if kind in (PlaceKind.RESIDUAL,) + COMPOSITE_KINDS:
        return (RingKind.Z,)
    if kind in FP_KINDS:
        return (RingKind.FPX,)
    if kind == PlaceKind.HUBER_QUOTIENT:
        return domain_rings(place.inner)
    return _LINE_RINGS


def _into_domain(place, elem: RingElement) -> RingElement:
    rings = domain_rings(place)
    p = getattr(place, 'p', None)
    if elem.ring in rings and (elem.ring not in CHAR_P_RINGS or elem.p == p):
        return elem
    for ring in rings:
        try:
            return coerce(elem, ring, p)
        except DomainMismatch:
            continue
    raise DomainMismatch(f"{elem.ring.value} element outside the domain of {place}")


# Evaluation

def _num_den(x: RingElement) -> Tuple[Coeffs, Coeffs]:
    if x.ring == RingKind.QXFRAC:
        return x.coeffs, x.den
    return x.coeffs, (Fraction(1),)


def _tropical(place: PlaceDescriptor, *exponents) -> HaloValue:
    h = place.codomain
    return HaloValue(h, GroupElement(h.group, tuple(Fraction(e) for e in exponents)))


def _unit_or_zero(place: PlaceDescriptor, is_zero: bool) -> HaloValue:
    h = place.codomain
    return halo_zero(h) if is_zero else halo_one(h)


def _padic_exponent(q, p: int) -> Fraction:
    return Fraction(-ord_p(q, p))


def _eval_scalar(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    q = x.scalar
    h = place.codomain
    kind = place.kind
    if kind == PlaceKind.RESIDUAL:
        return _unit_or_zero(place, q % place.p == 0)
    if kind == PlaceKind.COMPOSITE_RESIDUAL:
        return _unit_or_zero(place, q % place.m == 0)
    if not q:
        return halo_zero(h)
    if kind == PlaceKind.PADIC_TROP:
        return _tropical(place, _padic_exponent(q, place.p))
    if kind == PlaceKind.PADIC_POWER:
        return _tropical(place, place.t * _padic_exponent(q, place.p))
    if kind == PlaceKind.PADIC_REAL:
        return HaloValue(h, Fraction(place.p) ** -ord_p(q, place.p))
    if kind == PlaceKind.COMPOSITE_ADIC:
        return HaloValue(h, Fraction(1, place.m ** ord_p(q, place.m)))
    return HaloValue(h, abs(q))


def _eval_trivial(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    return _unit_or_zero(place, x.is_zero)


def _eval_fp(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    order = fp_order(place.p, place.modulus, x.coeffs)
    if place.kind == PlaceKind.FP_RESIDUAL:
        return _unit_or_zero(place, order is None or order > 0)
    if order is None:
        return halo_zero(place.codomain)
    return _tropical(place, -order)


def _eval_padic_eval(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    d = evaluate_at(den, place.center)
    if not d:
        raise DomainMismatch(f"{x} has a pole at {place.center}")
    value = evaluate_at(num, place.center) / d
    if not value:
        return halo_zero(place.codomain)
    return _tropical(place, _padic_exponent(value, place.p))


def _gauss_exponent(coeffs: Coeffs, place: PlaceDescriptor) -> Fraction:
    shifted = taylor_coefficients(coeffs, place.center)
    return max(
        _padic_exponent(c, place.p) + place.radius_exp * i
        for i, c in enumerate(shifted) if c
    )


def _eval_gauss(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    if not num:
        return halo_zero(place.codomain)
    return _tropical(place, _gauss_exponent(num, place) - _gauss_exponent(den, place))


def _case4_vector(coeffs: Coeffs, place: PlaceDescriptor) -> Tuple[Fraction, Fraction]:
    shifted = taylor_coefficients(coeffs, place.center)
    major = place.major
    terms = []
    for i, c in enumerate(shifted):
        if not c:
            continue
        e = _padic_exponent(c, place.p)
        if major.kind == MajorKind.EMPTY:
            terms.append((Fraction(i), e))
        elif major.kind == MajorKind.ALL:
            terms.append((Fraction(-i), e))
        else:
            terms.append((e + i * _padic_exponent(major.bound, place.p), Fraction(i)))
    return max(terms)


def _eval_case4(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    if not num:
        return halo_zero(place.codomain)
    top, bottom = _case4_vector(num, place), _case4_vector(den, place)
    return _tropical(place, top[0] - bottom[0], top[1] - bottom[1])


def _eval_immediate(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    if not num:
        return halo_zero(place.codomain)
    zero_set = from_poly(to_poly(num) * to_poly(den))
    for depth, (center, radius_exp) in enumerate(place.sequence):
        if has_root_in_closed_disc(zero_set, place.p, center, radius_exp):
            continue
        logger.debug(f"immediate point: disc {depth} avoids the zeros of {x}")
        value = evaluate_at(num, center) / evaluate_at(den, center)
        return _tropical(place, _padic_exponent(value, place.p))
    raise InsufficientFilterDepth(
        f"no disc of {place.sequence!r} avoids the zeros of {x}"
    )


def _eval_arch_eval(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    d = gaussian_value_norm(den, place.gaussian)
    if not d:
        raise DomainMismatch(f"{x} has a pole at {place.gaussian}")
    n = gaussian_value_norm(num, place.gaussian)
    if not n:
        return halo_zero(place.codomain)
    return HaloValue(place.codomain, Surd.sqrt_of_rational(n / d))


def _arch_line_value(place: PlaceDescriptor, q_exponent, norm: Fraction) -> HaloValue:
    h = place.codomain
    return HaloValue(h, (
        HaloValue(h.first, GroupElement(Q_GROUP, (Fraction(q_exponent),))),
        HaloValue(h.second, Surd.sqrt_of_rational(norm)),
    ))


def _eval_arch_infinitesimal(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    if not num:
        return halo_zero(place.codomain)
    top = gaussian_taylor_norms(num, place.gaussian)
    bottom = gaussian_taylor_norms(den, place.gaussian)
    i_top = next(i for i, c in enumerate(top) if c)
    i_bottom = next(i for i, c in enumerate(bottom) if c)
    # q^i has exponent -i: q is infinitesimally small
    return _arch_line_value(place, i_bottom - i_top, top[i_top] / bottom[i_bottom])


def _eval_arch_infinity(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    num, den = _num_den(x)
    if not num:
        return halo_zero(place.codomain)
    lead_top, lead_bottom = num[-1], den[-1]
    return _arch_line_value(
        place, len(num) - len(den), (lead_top * lead_top) / (lead_bottom * lead_bottom)
    )


def _eval_quotient(place: PlaceDescriptor, x: RingElement) -> HaloValue:
    value = evaluate(place.inner, x)
    if value.is_zero:
        return halo_zero(place.codomain)
    return HaloValue(place.codomain, value.data[1].data)


_EVALUATORS = {
    PlaceKind.TRIVIAL: _eval_trivial,
    PlaceKind.FP_RESIDUAL: _eval_fp,
    PlaceKind.FP_PADIC: _eval_fp,
    PlaceKind.PADIC_EVAL: _eval_padic_eval,
    PlaceKind.GAUSS_POINT: _eval_gauss,
    PlaceKind.HK_IMMEDIATE: _eval_immediate,
    PlaceKind.HK_CASE4: _eval_case4,
    PlaceKind.ARCH_EVAL: _eval_arch_eval,
    PlaceKind.ARCH_INFINITESIMAL: _eval_arch_infinitesimal,
    PlaceKind.ARCH_INFINITY: _eval_arch_infinity,
    PlaceKind.HUBER_QUOTIENT: _eval_quotient,
}


def evaluate(place, elem) -> HaloValue:
    """|elem| at place, as an exact value of place.codomain."""
    x = _into_domain(place, as_element(elem))
    if isinstance(place, OpaquePlace):
        return place.function(x)
    return _EVALUATORS.get(place.kind, _eval_scalar)(place, x)


# Kernels

class IdealKind(Enum):
    ZERO = 'zero'
    PRINCIPAL_INT = 'principal_int'
    PRINCIPAL_POLY = 'principal_poly'
    PRINCIPAL_LINEAR = 'principal_linear'


@dataclass(frozen=True)
class IdealDescriptor:
    kind: IdealKind
    generator: object = None
    characteristic: int = 0

    def __str__(self) -> str:
        if self.kind == IdealKind.ZERO:
            return '(0)'
        if self.kind == IdealKind.PRINCIPAL_POLY:
            return f"({to_poly(self.generator).as_expr()})"
        if self.kind == IdealKind.PRINCIPAL_LINEAR:
            return f"(X - {self.generator})"
        return f"({self.generator})"


def kernel(place: PlaceDescriptor) -> IdealDescriptor:
    """Kernel of place on its natural domain ring."""
    kind = place.kind
    if kind == PlaceKind.RESIDUAL:
        return IdealDescriptor(IdealKind.PRINCIPAL_INT, place.p)
    if kind == PlaceKind.COMPOSITE_RESIDUAL:
        # (m) is not prime: the place is not multiplicative
        return IdealDescriptor(IdealKind.PRINCIPAL_INT, place.m)
    if kind == PlaceKind.FP_RESIDUAL:
        return IdealDescriptor(IdealKind.PRINCIPAL_POLY, place.modulus, place.p)
    if kind == PlaceKind.PADIC_EVAL:
        return IdealDescriptor(IdealKind.PRINCIPAL_LINEAR, place.center)
    if kind == PlaceKind.ARCH_EVAL:
        re, im = place.gaussian
        if not im:
            return IdealDescriptor(IdealKind.PRINCIPAL_LINEAR, re)
        # minimal polynomial (X - a)(X - conj a) over ℚ
        return IdealDescriptor(IdealKind.PRINCIPAL_POLY, (re * re + im * im, -2 * re, Fraction(1)))
    if kind == PlaceKind.TRIVIAL and place.ring == RingKind.FP:
        return IdealDescriptor(IdealKind.ZERO, characteristic=place.p)
    return IdealDescriptor(IdealKind.ZERO)


def restrict_to_Z(place):
    """The place induced on ℤ through the structure map."""
    if isinstance(place, OpaquePlace):
        raise UnsupportedPlace(f"cannot restrict {place}")
    kind = place.kind
    if kind in Z_KINDS:
        return place
    if kind == PlaceKind.TRIVIAL:
        if place.ring in CHAR_P_RINGS:
            return residual(place.p)
        return trivial_on(RingKind.Z)
    if kind in FP_KINDS:
        return residual(place.p)
    if kind in PADIC_LINE_KINDS:
        return padic_real(place.p)
    if kind in ARCH_LINE_KINDS:
        return archimedean_z()
    return restrict_to_Z(place.inner)


def is_catalog(place) -> bool:
    return isinstance(place, PlaceDescriptor)


def is_multiplicative_place(place) -> Optional[bool]:
    if isinstance(place, OpaquePlace):
        return place.multiplicative
    return place.kind not in COMPOSITE_KINDS


def is_multiplicative_element(place, d, samples: Sequence[int] = range(-30, 31)) -> bool:
    """Whether |d| is nonzero and |d·c| = |d|·|c| for every c."""
    d = as_element(d)
    value = evaluate(place, d)
    if value.is_zero:
        return False
    multiplicative = is_multiplicative_place(place)
    if multiplicative:
        return True
    if is_catalog(place):
        # ord_m(dc) = ord_m(c) for all c exactly when d is prime to m
        return gcd(int(d.scalar), place.m) == 1
    h = place.codomain
    return all(
        evaluate(place, ring_mul(d, c)) == halo_mul(h, value, evaluate(place, c))
        for c in samples
    )
