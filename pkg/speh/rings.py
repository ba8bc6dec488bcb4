"""
Ring elements accepted by places, and exact polynomial helpers built on sympy.

Polynomials are stored as coefficient tuples, constant term first, trimmed of
trailing (leading-degree) zeros. Scalars use the same shape with at most one
coefficient, so zero is always the empty tuple.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy import I, Poly, QQ, Rational, Symbol

from .errors import DomainMismatch, ZeroDenominator

X = Symbol('X')

Coeffs = Tuple[Fraction, ...]
GaussianRational = Tuple[Fraction, Fraction]


class RingKind(Enum):
    Z = 'Z'
    Q = 'Q'
    FP = 'Fp'
    FPX = 'FpX'
    ZX = 'ZX'
    QX = 'QX'
    QXFRAC = 'QXfrac'


SCALAR_RINGS = (RingKind.Z, RingKind.Q, RingKind.FP)
POLY_RINGS = (RingKind.ZX, RingKind.QX, RingKind.QXFRAC)
CHAR_P_RINGS = (RingKind.FP, RingKind.FPX)


def trim(coeffs: Sequence) -> Coeffs:
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class RingElement:
    ring: RingKind
    coeffs: Coeffs
    den: Coeffs = (Fraction(1),)
    p: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def scalar(self) -> Fraction:
        if self.ring not in SCALAR_RINGS:
            raise DomainMismatch(f"{self.ring.value} element is not a scalar")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        if self.ring in SCALAR_RINGS:
            return str(self.scalar)
        text = str(to_poly(self.coeffs).as_expr())
        if self.ring == RingKind.QXFRAC:
            text = f"({text})/({to_poly(self.den).as_expr()})"
        return text


# Constructors

def integer(n) -> RingElement:
    n = Fraction(n)
    if n.denominator != 1:
        raise DomainMismatch(f"{n} is not an integer")
    return RingElement(RingKind.Z, trim([n]))


def rational(q) -> RingElement:
    return RingElement(RingKind.Q, trim([Fraction(q)]))


def prime_field(p: int, n) -> RingElement:
    return RingElement(RingKind.FP, trim([int(n) % p]), p=p)


def zx(coeffs: Sequence) -> RingElement:
    cs = trim(coeffs)
    if any(c.denominator != 1 for c in cs):
        raise DomainMismatch(f"non-integral coefficients {cs} in Z[X]")
    return RingElement(RingKind.ZX, cs)


def qx(coeffs: Sequence) -> RingElement:
    return RingElement(RingKind.QX, trim(coeffs))


def fpx(p: int, coeffs: Sequence) -> RingElement:
    return RingElement(RingKind.FPX, trim([int(c) % p for c in coeffs]), p=p)


def qx_fraction(num: Sequence, den: Sequence) -> RingElement:
    d = trim(den)
    if not d:
        raise ZeroDenominator("rational function with zero denominator")
    n = trim(num)
    if not n:
        return RingElement(RingKind.QXFRAC, (), (Fraction(1),))
    g = to_poly(n).gcd(to_poly(d))
    n, d = from_poly(to_poly(n).quo(g)), from_poly(to_poly(d).quo(g))
    # monic denominator
    lead = d[-1]
    return RingElement(RingKind.QXFRAC, tuple(c / lead for c in n), tuple(c / lead for c in d))


def as_element(x) -> RingElement:
    """Accept plain ints and Fractions wherever ring elements are expected."""
    if isinstance(x, RingElement):
        return x
    if isinstance(x, int):
        return integer(x)
    if isinstance(x, Fraction):
        return integer(x) if x.denominator == 1 else rational(x)
    raise DomainMismatch(f"cannot read {x!r} as a ring element")


def monomial_shift(center) -> RingElement:
    """X - center in ℚ[X]."""
    return qx([-Fraction(center), 1])


# Coercion

_EMBEDS = {
    RingKind.Z: (RingKind.Q, RingKind.FP, RingKind.FPX, RingKind.ZX, RingKind.QX, RingKind.QXFRAC),
    RingKind.Q: (RingKind.QX, RingKind.QXFRAC),
    RingKind.ZX: (RingKind.FPX, RingKind.QX, RingKind.QXFRAC),
    RingKind.QX: (RingKind.QXFRAC,),
    RingKind.FP: (RingKind.FPX,),
}


def coerce(elem: RingElement, ring: RingKind, p: Optional[int] = None) -> RingElement:
    """Map elem along the natural ring map into ring (reducing mod p for char p)."""
    if elem.ring == ring and (ring not in CHAR_P_RINGS or elem.p == p):
        return elem
    if ring not in _EMBEDS.get(elem.ring, ()):
        raise DomainMismatch(f"no ring map from {elem.ring.value} to {ring.value}")
    if ring == RingKind.Q:
        return rational(elem.scalar)
    if ring == RingKind.FP:
        return prime_field(p, elem.scalar)
    if ring == RingKind.FPX:
        return fpx(p, elem.coeffs)
    if ring == RingKind.ZX:
        return zx(elem.coeffs)
    if ring == RingKind.QX:
        return qx(elem.coeffs)
    return qx_fraction(elem.coeffs, (1,))


def common_ring(a: RingElement, b: RingElement) -> Tuple[RingElement, RingElement]:
    if a.ring == b.ring:
        if a.p != b.p:
            raise DomainMismatch(f"characteristics {a.p} and {b.p} differ")
        return a, b
    if b.ring in _EMBEDS.get(a.ring, ()):
        return coerce(a, b.ring, b.p), b
    if a.ring in _EMBEDS.get(b.ring, ()):
        return a, coerce(b, a.ring, a.p)
    raise DomainMismatch(f"{a.ring.value} and {b.ring.value} share no ring")


# Arithmetic

def _rebuild(template: RingElement, coeffs: Sequence, den: Sequence = (1,)) -> RingElement:
    if template.ring == RingKind.Z:
        return integer(coeffs[0] if coeffs else 0)
    if template.ring == RingKind.Q:
        return rational(coeffs[0] if coeffs else 0)
    if template.ring == RingKind.FP:
        return prime_field(template.p, coeffs[0] if coeffs else 0)
    if template.ring == RingKind.FPX:
        return fpx(template.p, coeffs)
    if template.ring == RingKind.ZX:
        return zx(coeffs)
    if template.ring == RingKind.QX:
        return qx(coeffs)
    return qx_fraction(coeffs, den)


def ring_add(a, b) -> RingElement:
    a, b = common_ring(as_element(a), as_element(b))
    if a.ring == RingKind.QXFRAC:
        num = to_poly(a.coeffs) * to_poly(b.den) + to_poly(b.coeffs) * to_poly(a.den)
        return qx_fraction(from_poly(num), from_poly(to_poly(a.den) * to_poly(b.den)))
    if a.ring in SCALAR_RINGS:
        return _rebuild(a, [a.scalar + b.scalar])
    return _rebuild(a, from_poly(to_poly(a.coeffs) + to_poly(b.coeffs)))


def ring_mul(a, b) -> RingElement:
    a, b = common_ring(as_element(a), as_element(b))
    if a.ring == RingKind.QXFRAC:
        return qx_fraction(
            from_poly(to_poly(a.coeffs) * to_poly(b.coeffs)),
            from_poly(to_poly(a.den) * to_poly(b.den)),
        )
    if a.ring in SCALAR_RINGS:
        return _rebuild(a, [a.scalar * b.scalar])
    return _rebuild(a, from_poly(to_poly(a.coeffs) * to_poly(b.coeffs)))


def ring_neg(a) -> RingElement:
    a = as_element(a)
    return _rebuild(a, [-c for c in a.coeffs], a.den)


def ring_pow(a, n: int) -> RingElement:
    result = _rebuild(as_element(a), [1])
    for _ in range(n):
        result = ring_mul(result, a)
    return result


# sympy bridges

def to_poly(coeffs: Sequence, modulus: Optional[int] = None) -> Poly:
    reps = [Rational(c.numerator, c.denominator) for c in map(Fraction, coeffs)]
    if modulus is not None:
        return Poly(list(reversed([int(c) for c in reps])) or [0], X, modulus=modulus)
    return Poly(list(reversed(reps)) or [0], X, domain=QQ)


def from_poly(poly: Poly, modulus: Optional[int] = None) -> Coeffs:
    coeffs = [Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in reversed(poly.all_coeffs())]
    if modulus is not None:
        coeffs = [Fraction(int(c) % modulus) for c in coeffs]
    return trim(coeffs)


def evaluate_at(coeffs: Sequence, a) -> Fraction:
    """Value of the polynomial at a rational point."""
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * Fraction(a) + c
    return value


def taylor_coefficients(coeffs: Sequence, center) -> Coeffs:
    """Coefficients of P(X + center), constant term first."""
    if not coeffs:
        return ()
    return from_poly(to_poly(coeffs).shift(sympy_rational(center)))


def gaussian_taylor_norms(coeffs: Sequence, center: GaussianRational) -> List[Fraction]:
    """|c_i|² for the Taylor coefficients c_i of P at a Gaussian rational center."""
    re, im = center
    if not im:
        return [c * c for c in taylor_coefficients(coeffs, re)]
    a = Rational(re.numerator, re.denominator) + I * Rational(im.numerator, im.denominator)
    shifted = sympy.expand(to_poly(coeffs).as_expr().subs(X, X + a))
    terms = Poly(shifted, X).all_coeffs() if shifted != 0 else []
    norms = []
    for c in reversed(terms):
        n = sympy.expand(c * sympy.conjugate(c))
        norms.append(Fraction(int(sympy.numer(n)), int(sympy.denom(n))))
    while norms and not norms[-1]:
        norms.pop()
    return norms


def gaussian_value_norm(coeffs: Sequence, center: GaussianRational) -> Fraction:
    """|P(a)|² for a Gaussian rational a."""
    norms = gaussian_taylor_norms(coeffs, center)
    return norms[0] if norms else Fraction(0)


def ord_p(q, p: int) -> Optional[int]:
    """p-adic order of a rational (None for zero); p may be composite for integers."""
    q = Fraction(q)
    if not q:
        return None
    return sympy.multiplicity(p, abs(q.numerator)) - sympy.multiplicity(p, q.denominator)


def newton_slopes(coeffs: Sequence, p: int) -> List[Tuple[Fraction, int]]:
    """Slopes of the lower convex hull of the p-adic Newton polygon.

    Each (slope, length) segment stands for `length` roots of valuation -slope.
    Zero coefficients are skipped; roots at 0 contribute no segment.
    """
    points = [(i, ord_p(c, p)) for i, c in enumerate(coeffs) if c]
    hull: List[Tuple[int, int]] = []
    for pt in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] when it lies on or above the chord hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    return [
        (Fraction(y2 - y1, x2 - x1), x2 - x1)
        for (x1, y1), (x2, y2) in zip(hull, hull[1:])
    ]


def has_root_in_closed_disc(coeffs: Sequence, p: int, center, radius_exp) -> bool:
    """Whether P has a root α in ℚ_p-bar with |α - center|_p ≤ p^radius_exp."""
    shifted = taylor_coefficients(coeffs, center)
    if not shifted:
        return True
    if len(shifted) == 1:
        return False
    if not shifted[0]:
        return True
    return any(slope <= Fraction(radius_exp) for slope, _ in newton_slopes(shifted, p))


def fp_poly(p: int, coeffs: Sequence) -> Poly:
    return to_poly(coeffs, modulus=p)


def fp_order(p: int, modulus: Sequence, coeffs: Sequence) -> Optional[int]:
    """Order of the irreducible modulus P in Q over 𝔽_p (None for Q = 0)."""
    q = fp_poly(p, coeffs)
    if q.is_zero:
        return None
    P = fp_poly(p, modulus)
    order = 0
    while True:
        quotient, remainder = q.div(P)
        if not remainder.is_zero:
            return order
        q, order = quotient, order + 1


def sympy_rational(q) -> Rational:
    q = Fraction(q)
    return Rational(q.numerator, q.denominator)

