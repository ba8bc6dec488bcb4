"""
JSON codecs for everything that crosses the CLI or HTTP boundary.

Rationals travel as strings ("1/6"), polynomials as coefficient lists with the
constant term first. Every parse failure raises ParseError.
"""
from fractions import Fraction
from typing import Any, Dict, List, Optional

from sympy import isprime

from .affine_line import Disc, DiscKind
from .errors import ParseError, SpehError
from .halos import HaloDescriptor, HaloKind, HaloValue
from .ordered_groups import GroupElement, OrderedGroupDescriptor
from .places import (
    DiscSequence,
    MajorKind,
    MajorSubset,
    PlaceDescriptor,
    PlaceKind,
    arch_eval,
    arch_infinitesimal,
    arch_infinity,
    archimedean_z,
    composite_adic,
    composite_residual,
    fp_padic,
    fp_residual,
    gauss_point,
    hk_case4,
    hk_immediate,
    huber_quotient,
    padic_eval,
    padic_power,
    padic_real,
    padic_trop,
    residual,
    trivial_on,
)
from .rings import (
    RingElement,
    RingKind,
    fpx,
    integer,
    prime_field,
    qx,
    qx_fraction,
    rational,
    zx,
)
from .sheaf import AdeleElement, CompletedElement, RingDescriptor, SectionRingKind
from .spectra import RationalDomain, rational_domain
from .surds import Surd


def fraction(value, name: str = 'value') -> Fraction:
    """Read an int or a "p/q" string as a Fraction."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError(f"{name} must be an integer or a rational string, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{name}: {value!r} is not a rational number")


def integer_field(data: dict, key: str) -> int:
    value = require(data, key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{key} must be an integer, got {value!r}")
    return value


def require(data: dict, key: str):
    if not isinstance(data, dict):
        raise ParseError(f"expected a JSON object, got {type(data).__name__}")
    if key not in data:
        raise ParseError(f"missing field '{key}'")
    return data[key]


def fraction_list(values, name: str) -> List[Fraction]:
    if not isinstance(values, list):
        raise ParseError(f"{name} must be a list")
    return [fraction(v, name) for v in values]


def dump_fraction(q: Fraction) -> str:
    return str(Fraction(q))


def _radicand(value) -> int:
    d = fraction(value, 'radicand')
    if d.denominator != 1 or d < 1:
        raise ParseError(f"a radicand must be a positive integer, got {value!r}")
    return int(d)


class ElementSpec:
    """Ring elements: {"ring": "Z", "n": "6"}, {"ring": "ZX", "coeffs": [...]}, ..."""

    @staticmethod
    def parse(data: dict) -> RingElement:
        try:
            ring = RingKind(require(data, 'ring'))
        except ValueError:
            raise ParseError(f"unknown ring {data.get('ring')!r}")
        try:
            if ring == RingKind.Z:
                return integer(fraction(require(data, 'n'), 'n'))
            if ring == RingKind.Q:
                return rational(fraction(require(data, 'q'), 'q'))
            if ring == RingKind.FP:
                return prime_field(integer_field(data, 'p'), fraction(require(data, 'n'), 'n'))
            if ring == RingKind.ZX:
                return zx(fraction_list(require(data, 'coeffs'), 'coeffs'))
            if ring == RingKind.QX:
                return qx(fraction_list(require(data, 'coeffs'), 'coeffs'))
            if ring == RingKind.FPX:
                return fpx(integer_field(data, 'p'), fraction_list(require(data, 'coeffs'), 'coeffs'))
            return qx_fraction(
                fraction_list(require(data, 'num'), 'num'),
                fraction_list(require(data, 'den'), 'den'),
            )
        except ParseError:
            raise
        except SpehError as e:
            raise ParseError(f"invalid {ring.value} element: {e}")

    @staticmethod
    def dump(elem: RingElement) -> dict:
        ring = elem.ring
        if ring == RingKind.Z:
            return {'ring': ring.value, 'n': dump_fraction(elem.scalar)}
        if ring == RingKind.Q:
            return {'ring': ring.value, 'q': dump_fraction(elem.scalar)}
        if ring == RingKind.FP:
            return {'ring': ring.value, 'p': elem.p, 'n': dump_fraction(elem.scalar)}
        if ring == RingKind.QXFRAC:
            return {
                'ring': ring.value,
                'num': [dump_fraction(c) for c in elem.coeffs],
                'den': [dump_fraction(c) for c in elem.den],
            }
        out = {'ring': ring.value, 'coeffs': [dump_fraction(c) for c in elem.coeffs]}
        if ring == RingKind.FPX:
            out['p'] = elem.p
        return out


class HaloSpec:

    @staticmethod
    def parse(data: dict) -> HaloDescriptor:
        kind = require(data, 'kind')
        if kind == 'tropical':
            labels = require(data, 'labels')
            if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
                raise ParseError("labels must be a list of strings")
            return HaloDescriptor.tropical(OrderedGroupDescriptor.of(*labels))
        if kind == 'lex':
            return HaloDescriptor.lex(HaloSpec.parse(require(data, 'first')),
                                      HaloSpec.parse(require(data, 'second')))
        simple = {'trivial': HaloDescriptor.trivial, 'rationals': HaloDescriptor.rationals,
                  'surds': HaloDescriptor.surds}
        if kind not in simple:
            raise ParseError(f"unknown halo kind {kind!r}")
        return simple[kind]()

    @staticmethod
    def dump(h: HaloDescriptor) -> dict:
        if h.kind == HaloKind.TROPICAL:
            return {'kind': 'tropical', 'labels': list(h.group.labels)}
        if h.kind == HaloKind.LEX:
            return {'kind': 'lex', 'first': HaloSpec.dump(h.first), 'second': HaloSpec.dump(h.second)}
        return {'kind': h.kind.name.lower()}


class ValueSpec:
    """Halo values: {"halo": ..., "value": ...} and the compact text form."""

    @staticmethod
    def _payload(h: HaloDescriptor, data):
        if h.kind == HaloKind.TRIVIAL:
            return 1
        if h.kind == HaloKind.TROPICAL:
            return [dump_fraction(e) for e in data.exponents]
        if h.kind == HaloKind.RATIONALS:
            return dump_fraction(data)
        if h.kind == HaloKind.SURDS:
            return [[dump_fraction(c), d] for d, c in data.terms]
        return [ValueSpec._payload(h.first, data[0].data), ValueSpec._payload(h.second, data[1].data)]

    @staticmethod
    def _read(h: HaloDescriptor, raw):
        if h.kind == HaloKind.TRIVIAL:
            return 1
        if h.kind == HaloKind.TROPICAL:
            return GroupElement(h.group, tuple(fraction_list(raw, 'exponents')))
        if h.kind == HaloKind.RATIONALS:
            return fraction(raw)
        if h.kind == HaloKind.SURDS:
            if not isinstance(raw, list) or not all(isinstance(t, list) and len(t) == 2 for t in raw):
                raise ParseError("surd payload must be a list of [c, d] terms")
            return Surd.from_terms((_radicand(t[1]), fraction(t[0])) for t in raw)
        if not isinstance(raw, list) or len(raw) != 2:
            raise ParseError("lex payload must be a pair")
        return (HaloValue(h.first, ValueSpec._read(h.first, raw[0])),
                HaloValue(h.second, ValueSpec._read(h.second, raw[1])))

    @staticmethod
    def parse(data: dict) -> HaloValue:
        h = HaloSpec.parse(require(data, 'halo'))
        try:
            return HaloValue(h, ValueSpec._unwrap(h, require(data, 'value')))
        except (SpehError, ValueError, TypeError, IndexError) as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(f"invalid value for {h}: {e}")

    @staticmethod
    def _unwrap(h: HaloDescriptor, raw):
        if raw == 'zero':
            return None
        if not isinstance(raw, dict) or set(raw) != {'unit'}:
            raise ParseError(f"value must be \"zero\" or {{\"unit\": ...}}, got {raw!r}")
        return ValueSpec._read(h, raw['unit'])

    @staticmethod
    def dump(value: HaloValue) -> dict:
        if value.is_zero:
            return {'halo': HaloSpec.dump(value.halo), 'value': 'zero'}
        return {'halo': HaloSpec.dump(value.halo), 'value': {'unit': ValueSpec._payload(value.halo, value.data)}}

    @staticmethod
    def compact(value: HaloValue) -> str:
        """Text form such as 0, 1/6, 2^-1, 3*sqrt(2) or (q^-1, 2)."""
        h = value.halo
        if value.is_zero:
            return '0'
        if h.kind == HaloKind.TRIVIAL:
            return '1'
        if h.kind == HaloKind.TROPICAL:
            factors = [f"{label}^{e}" for label, e in zip(h.group.labels, value.data.exponents) if e]
            return '*'.join(factors) or '1'
        if h.kind in (HaloKind.RATIONALS, HaloKind.SURDS):
            return str(value.data)
        return f"({ValueSpec.compact(value.data[0])}, {ValueSpec.compact(value.data[1])})"


class MajorSpec:

    @staticmethod
    def parse(data) -> MajorSubset:
        if data in ('empty', 'all'):
            return MajorSubset(MajorKind(data))
        if isinstance(data, dict) and 'cut' in data:
            bound = fraction(data['cut'], 'cut')
            if not bound:
                raise ParseError("the cut bound must be nonzero")
            return MajorSubset(MajorKind.CUT, bound)
        raise ParseError(f"major must be \"empty\", \"all\" or {{\"cut\": b}}, got {data!r}")

    @staticmethod
    def dump(major: MajorSubset):
        if major.kind == MajorKind.CUT:
            return {'cut': dump_fraction(major.bound)}
        return major.kind.value


def _gaussian(raw):
    if isinstance(raw, list):
        if len(raw) != 2:
            raise ParseError("a complex center is [re, im]")
        return fraction(raw[0], 'center'), fraction(raw[1], 'center')
    return fraction(raw, 'center')


class PlaceSpec:
    """Places: {"place": <kind>, ...parameters}."""

    @staticmethod
    def parse(data: dict) -> PlaceDescriptor:
        try:
            kind = PlaceKind(require(data, 'place'))
        except ValueError:
            raise ParseError(f"unknown place {data.get('place')!r}")
        try:
            return PlaceSpec._build(kind, data)
        except ParseError:
            raise
        except SpehError as e:
            raise ParseError(f"invalid {kind.value} place: {e}")

    @staticmethod
    def _build(kind: PlaceKind, data: dict) -> PlaceDescriptor:
        if kind == PlaceKind.TRIVIAL:
            try:
                ring = RingKind(data.get('ring', 'Z'))
            except ValueError:
                raise ParseError(f"unknown ring {data.get('ring')!r}")
            return trivial_on(ring, data.get('p'))
        if kind == PlaceKind.ARCHIMEDEAN:
            return archimedean_z()
        if kind == PlaceKind.ARCH_INFINITY:
            return arch_infinity()
        if kind == PlaceKind.ARCH_EVAL:
            return arch_eval(_gaussian(require(data, 'center')))
        if kind == PlaceKind.ARCH_INFINITESIMAL:
            return arch_infinitesimal(_gaussian(require(data, 'center')))
        if kind == PlaceKind.HUBER_QUOTIENT:
            return huber_quotient(PlaceSpec.parse(require(data, 'inner')))
        if kind in (PlaceKind.COMPOSITE_ADIC, PlaceKind.COMPOSITE_RESIDUAL):
            build = composite_adic if kind == PlaceKind.COMPOSITE_ADIC else composite_residual
            return build(integer_field(data, 'm'))

        p = integer_field(data, 'p')
        if kind == PlaceKind.PADIC_TROP:
            return padic_trop(p)
        if kind == PlaceKind.PADIC_REAL:
            return padic_real(p)
        if kind == PlaceKind.RESIDUAL:
            return residual(p)
        if kind == PlaceKind.PADIC_POWER:
            return padic_power(p, fraction(require(data, 't'), 't'))
        if kind == PlaceKind.FP_RESIDUAL:
            return fp_residual(p, fraction_list(require(data, 'modulus'), 'modulus'))
        if kind == PlaceKind.FP_PADIC:
            return fp_padic(p, fraction_list(require(data, 'modulus'), 'modulus'))
        if kind == PlaceKind.PADIC_EVAL:
            return padic_eval(p, fraction(require(data, 'center'), 'center'))
        if kind == PlaceKind.GAUSS_POINT:
            return gauss_point(p, fraction(require(data, 'center'), 'center'),
                               fraction(require(data, 'radiusExp'), 'radiusExp'))
        if kind == PlaceKind.HK_IMMEDIATE:
            discs = require(data, 'discs')
            if not isinstance(discs, list) or not all(isinstance(d, list) and len(d) == 2 for d in discs):
                raise ParseError("discs must be a list of [center, radiusExp] pairs")
            return hk_immediate(DiscSequence(p, [(fraction(c), fraction(r)) for c, r in discs]))
        return hk_case4(p, fraction(require(data, 'center'), 'center'), MajorSpec.parse(require(data, 'major')))

    @staticmethod
    def dump(place: PlaceDescriptor) -> dict:
        out: Dict[str, Any] = {'place': place.kind.value}
        if place.kind == PlaceKind.TRIVIAL:
            out['ring'] = place.ring.value
        if place.p is not None:
            out['p'] = place.p
        if place.m is not None:
            out['m'] = place.m
        if place.t is not None:
            out['t'] = dump_fraction(place.t)
        if place.modulus is not None:
            out['modulus'] = [dump_fraction(c) for c in place.modulus]
        if place.center is not None:
            out['center'] = dump_fraction(place.center)
        if place.gaussian is not None:
            re, im = place.gaussian
            out['center'] = [dump_fraction(re), dump_fraction(im)]
        if place.radius_exp is not None:
            out['radiusExp'] = dump_fraction(place.radius_exp)
        if place.major is not None:
            out['major'] = MajorSpec.dump(place.major)
        if place.sequence is not None:
            out['discs'] = [[dump_fraction(c), dump_fraction(r)] for c, r in place.sequence.prefix]
        if place.inner is not None:
            out['inner'] = PlaceSpec.dump(place.inner)
        return out


class DiscSpec:
    """{"center": "a", "radiusExp": "r", "kind": "closed"} or "radius" for real discs."""

    @staticmethod
    def parse(data: dict) -> Disc:
        try:
            kind = DiscKind(data.get('kind', 'closed'))
        except ValueError:
            raise ParseError(f"unknown disc kind {data.get('kind')!r}")
        center = fraction(require(data, 'center'), 'center')
        try:
            if 'radius' in data:
                return Disc(center, kind, radius=fraction(data['radius'], 'radius'))
            return Disc(center, kind, radius_exp=fraction(require(data, 'radiusExp'), 'radiusExp'))
        except SpehError as e:
            if isinstance(e, ParseError):
                raise
            raise ParseError(str(e))

    @staticmethod
    def dump(disc: Disc) -> dict:
        out = {'center': dump_fraction(disc.center), 'kind': disc.kind.value}
        if disc.archimedean:
            out['radius'] = dump_fraction(disc.radius)
        else:
            out['radiusExp'] = dump_fraction(disc.radius_exp)
        return out


def _domain_entry(raw):
    if isinstance(raw, list):
        return fraction_list(raw, 'coeffs')
    return fraction(raw, 'entry')


class DomainSpec:
    """{"num": [...], "den": ..., "strict": true}; polynomial entries are coefficient lists."""

    @staticmethod
    def parse(data: dict) -> RationalDomain:
        numerators = require(data, 'num')
        if not isinstance(numerators, list):
            raise ParseError("num must be a list")
        strict = data.get('strict', True)
        if not isinstance(strict, bool):
            raise ParseError("strict must be a boolean")
        factors = data.get('denFactors')
        try:
            return rational_domain(
                [_domain_entry(a) for a in numerators],
                _domain_entry(require(data, 'den')),
                strict,
                None if factors is None else [_domain_entry(f) for f in factors],
            )
        except ParseError:
            raise
        except SpehError as e:
            raise ParseError(f"invalid domain: {e}")

    @staticmethod
    def _entry(elem: RingElement):
        if elem.ring == RingKind.Z:
            return dump_fraction(elem.scalar)
        return [dump_fraction(c) for c in elem.coeffs]

    @staticmethod
    def dump(domain: RationalDomain) -> dict:
        out = {
            'ring': domain.ring.value,
            'num': [DomainSpec._entry(a) for a in domain.numerators],
            'den': DomainSpec._entry(domain.denominator),
            'strict': domain.strict,
        }
        if domain.denominator_factors is not None:
            out['denFactors'] = [DomainSpec._entry(f) for f in domain.denominator_factors]
        return out


class RingSpec:

    @staticmethod
    def parse(data: dict) -> RingDescriptor:
        try:
            kind = SectionRingKind(require(data, 'ring'))
        except ValueError:
            raise ParseError(f"unknown section ring {data.get('ring')!r}")
        if kind == SectionRingKind.LOCALIZED:
            return RingDescriptor.localized(integer_field(data, 'm'))
        if kind == SectionRingKind.PRODUCT:
            factors = require(data, 'factors')
            if not isinstance(factors, list):
                raise ParseError("factors must be a list")
            return RingDescriptor.product([RingSpec.parse(f) for f in factors])
        if kind == SectionRingKind.REAL:
            return RingDescriptor.real()
        if kind == SectionRingKind.RATIONAL:
            return RingDescriptor.rational()
        p = integer_field(data, 'p')
        return {
            SectionRingKind.PADIC_INTEGERS: RingDescriptor.padic_integers,
            SectionRingKind.PADIC_FIELD: RingDescriptor.padic_field,
            SectionRingKind.FINITE_FIELD: RingDescriptor.finite_field,
        }[kind](p)

    @staticmethod
    def dump(ring: RingDescriptor) -> dict:
        out: Dict[str, Any] = {'ring': ring.kind.value, 'name': str(ring)}
        if ring.p is not None:
            out['p'] = ring.p
        if ring.m is not None:
            out['m'] = ring.m
        if ring.factors:
            out['factors'] = [RingSpec.dump(f) for f in ring.factors]
        if ring.topology is not None:
            out['topology'] = ring.topology
        return out


class CompletedSpec:
    """p-adic payloads as {"p": 2, "k": 4, "residue": "11", "val": 0}."""

    @staticmethod
    def dump(x: CompletedElement) -> dict:
        kind = x.ring.kind
        if x.ring.is_padic:
            return {'p': x.ring.p, 'k': x.precision, 'residue': str(x.residue), 'val': x.valuation}
        if kind == SectionRingKind.REAL:
            return {'real': [dump_fraction(x.lower), dump_fraction(x.upper)], 'k': x.precision}
        if kind == SectionRingKind.PRODUCT:
            return {'components': [CompletedSpec.dump(c) for c in x.components]}
        return {'value': dump_fraction(x.value)}

    @staticmethod
    def parse(data: dict, ring: RingDescriptor) -> CompletedElement:
        if ring.is_padic:
            residue = fraction(require(data, 'residue'), 'residue')
            k, val = integer_field(data, 'k'), integer_field(data, 'val')
            if residue.denominator != 1 or not 0 <= residue < ring.p ** k:
                raise ParseError(f"residue {residue} outside 0..{ring.p}^{k}")
            return CompletedElement(ring, residue=int(residue), precision=k, valuation=val)
        if ring.kind == SectionRingKind.REAL:
            bounds = fraction_list(require(data, 'real'), 'real')
            if len(bounds) != 2 or bounds[0] > bounds[1]:
                raise ParseError("real must be an interval [lower, upper]")
            return CompletedElement(ring, lower=bounds[0], upper=bounds[1],
                                    precision=integer_field(data, 'k'))
        if ring.kind == SectionRingKind.PRODUCT:
            components = require(data, 'components')
            if not isinstance(components, list) or len(components) != len(ring.factors):
                raise ParseError(f"{ring} needs {len(ring.factors)} components")
            return CompletedElement(ring, components=tuple(
                CompletedSpec.parse(c, f) for c, f in zip(components, ring.factors)
            ))
        return CompletedElement(ring, value=fraction(require(data, 'value'), 'value'))


class AdeleSpec:
    """{"exceptional": {"2": {...}}, "real": [lo, hi], "k": 8, "tail": "integral"}."""

    @staticmethod
    def dump(adele: AdeleElement) -> dict:
        return {
            'exceptional': {str(p): CompletedSpec.dump(x) for p, x in adele.exceptional},
            'real': [dump_fraction(adele.real.lower), dump_fraction(adele.real.upper)],
            'k': adele.real.precision,
            'tail': adele.tail,
        }

    @staticmethod
    def parse(data: dict) -> AdeleElement:
        exceptional = require(data, 'exceptional')
        if not isinstance(exceptional, dict):
            raise ParseError("exceptional must be an object keyed by prime")
        if data.get('tail', 'integral') != 'integral':
            raise ParseError("only the integral tail is supported")
        components = []
        for key, payload in exceptional.items():
            if not str(key).isdigit() or not isprime(int(key)):
                raise ParseError(f"exceptional key {key!r} is not a prime")
            p = int(key)
            components.append((p, CompletedSpec.parse(payload, RingDescriptor.padic_field(p))))
        components.sort(key=lambda item: item[0])
        real = CompletedSpec.parse(
            {'real': require(data, 'real'), 'k': data.get('k', 0)}, RingDescriptor.real(),
        )
        return AdeleElement(tuple(components), real)


def optional_int(data: dict, key: str, default: Optional[int]) -> Optional[int]:
    if key not in data or data[key] is None:
        return default
    return integer_field(data, key)
