"""
Nonnegative sums of square roots Σ c_d·√d with exact comparison.

Terms are kept over squarefree d with positive rational coefficients, so two
surds are equal exactly when their term tuples are (square roots of distinct
squarefree integers are linearly independent over ℚ). Strict order is decided
by dyadic interval evaluation refined until the intervals separate.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterable, Tuple

from sympy import factorint

from .ordered_groups import Ordering

INITIAL_BITS = 32


def squarefree_decompose(n: int) -> Tuple[int, int]:
    """Write n > 0 as s²·d with d squarefree and return (s, d)."""
    if n <= 0:
        raise ValueError(f"squarefree decomposition of {n}")
    s, d = 1, 1
    for prime, exp in factorint(n).items():
        s *= prime ** (exp // 2)
        if exp % 2:
            d *= prime
    return s, d


@dataclass(frozen=True)
class Surd:
    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, object]]) -> 'Surd':
        """Canonicalize arbitrary (d, c) pairs with d ≥ 1 and c ≥ 0."""
        acc: Dict[int, Fraction] = {}
        for d, c in terms:
            c = Fraction(c)
            if c < 0 or d < 1:
                raise ValueError(f"negative surd term {c}·√{d}")
            if not c:
                continue
            s, core = squarefree_decompose(int(d))
            acc[core] = acc.get(core, Fraction(0)) + c * s
        return cls._canonical(acc)

    @classmethod
    def _canonical(cls, acc: Dict[int, Fraction]) -> 'Surd':
        return cls(tuple(sorted((d, c) for d, c in acc.items() if c)))

    @classmethod
    def rational(cls, q) -> 'Surd':
        q = Fraction(q)
        return cls(((1, q),)) if q else cls()

    @classmethod
    def sqrt_of_rational(cls, q) -> 'Surd':
        """√q for rational q ≥ 0, as the single term (s/den)·√d."""
        q = Fraction(q)
        if q < 0:
            raise ValueError(f"square root of {q}")
        if not q:
            return cls()
        # q = (num·den)/den²
        s, d = squarefree_decompose(q.numerator * q.denominator)
        return cls(((d, Fraction(s, q.denominator)),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: 'Surd') -> 'Surd':
        acc = dict(self.terms)
        for d, c in other.terms:
            acc[d] = acc.get(d, Fraction(0)) + c
        return Surd._canonical(acc)

    def __mul__(self, other: 'Surd') -> 'Surd':
        acc: Dict[int, Fraction] = {}
        for d1, c1 in self.terms:
            for d2, c2 in other.terms:
                # √d1·√d2 = g·√((d1/g)(d2/g)) for squarefree d1, d2
                g = gcd(d1, d2)
                core = (d1 // g) * (d2 // g)
                acc[core] = acc.get(core, Fraction(0)) + c1 * c2 * g
        return Surd._canonical(acc)

    def square(self) -> 'Surd':
        return self * self

    def interval(self, bits: int) -> Tuple[Fraction, Fraction]:
        """Dyadic enclosure [lo, hi] of the represented real."""
        scale = 4 ** bits
        denom = 2 ** bits
        lo = hi = Fraction(0)
        for d, c in self.terms:
            root = isqrt(d * scale)
            lo += c * Fraction(root, denom)
            hi += c * Fraction(root if root * root == d * scale else root + 1, denom)
        return lo, hi

    def compare(self, other: 'Surd') -> Ordering:
        if self.terms == other.terms:
            return Ordering.EQUAL
        bits = INITIAL_BITS
        while True:
            lo1, hi1 = self.interval(bits)
            lo2, hi2 = other.interval(bits)
            if hi1 < lo2:
                return Ordering.LESS
            if hi2 < lo1:
                return Ordering.GREATER
            bits *= 2

    def __float__(self) -> float:
        return sum(float(c) * float(d) ** 0.5 for d, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        return ' + '.join(str(c) if d == 1 else f"{c}*sqrt({d})" for d, c in self.terms)
