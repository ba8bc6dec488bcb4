"""
Value halos: ordered semirings in which generalized seminorms take values.

Every descriptor here is a positive totally ordered aura. Values are immutable
and every operation is pure.
"""
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .errors import MixedHalos, ZeroDenominator
from .ordered_groups import (
    GroupElement,
    OrderedGroupDescriptor,
    Ordering,
    group_cmp,
    group_identity,
    group_max,
    group_mul,
)
from .surds import Surd


class HaloKind(Enum):
    TRIVIAL = auto()
    TROPICAL = auto()
    RATIONALS = auto()
    SURDS = auto()
    LEX = auto()


@dataclass(frozen=True)
class HaloDescriptor:
    kind: HaloKind
    group: Optional[OrderedGroupDescriptor] = None
    first: Optional['HaloDescriptor'] = None
    second: Optional['HaloDescriptor'] = None

    @classmethod
    def trivial(cls) -> 'HaloDescriptor':
        return cls(HaloKind.TRIVIAL)

    @classmethod
    def tropical(cls, group: OrderedGroupDescriptor) -> 'HaloDescriptor':
        return cls(HaloKind.TROPICAL, group=group)

    @classmethod
    def rationals(cls) -> 'HaloDescriptor':
        return cls(HaloKind.RATIONALS)

    @classmethod
    def surds(cls) -> 'HaloDescriptor':
        return cls(HaloKind.SURDS)

    @classmethod
    def lex(cls, first: 'HaloDescriptor', second: 'HaloDescriptor') -> 'HaloDescriptor':
        return cls(HaloKind.LEX, first=first, second=second)

    def __str__(self) -> str:
        if self.kind == HaloKind.TROPICAL:
            return f"Trop({','.join(self.group.labels)})"
        if self.kind == HaloKind.LEX:
            return f"Lex({self.first}, {self.second})"
        return self.kind.name.title()


@dataclass(frozen=True)
class HaloValue:
    """A halo element; data is None for zero.

    Unit payloads: 1 (trivial), GroupElement (tropical), positive Fraction
    (rationals), nonzero Surd (surds), pair of nonzero HaloValues (lex).
    """
    halo: HaloDescriptor
    data: object = None

    def __post_init__(self):
        if self.data is not None and not _payload_matches(self.halo, self.data):
            raise MixedHalos(f"payload {self.data!r} does not belong to {self.halo}")

    @property
    def is_zero(self) -> bool:
        return self.data is None


def _payload_matches(h: HaloDescriptor, data) -> bool:
    if h.kind == HaloKind.TRIVIAL:
        return data == 1
    if h.kind == HaloKind.TROPICAL:
        return isinstance(data, GroupElement) and data.group == h.group
    if h.kind == HaloKind.RATIONALS:
        return isinstance(data, Fraction) and data > 0
    if h.kind == HaloKind.SURDS:
        return isinstance(data, Surd) and not data.is_zero
    return (
        isinstance(data, tuple) and len(data) == 2
        and data[0].halo == h.first and data[1].halo == h.second
        and not data[0].is_zero and not data[1].is_zero
    )


def halo_zero(h: HaloDescriptor) -> HaloValue:
    return HaloValue(h)


def halo_one(h: HaloDescriptor) -> HaloValue:
    if h.kind == HaloKind.TRIVIAL:
        return HaloValue(h, 1)
    if h.kind == HaloKind.TROPICAL:
        return HaloValue(h, group_identity(h.group))
    if h.kind == HaloKind.RATIONALS:
        return HaloValue(h, Fraction(1))
    if h.kind == HaloKind.SURDS:
        return HaloValue(h, Surd.rational(1))
    return HaloValue(h, (halo_one(h.first), halo_one(h.second)))


def rational_value(h: HaloDescriptor, q) -> HaloValue:
    """The value q ≥ 0 in an archimedean halo (rationals or surds)."""
    q = Fraction(q)
    if not q:
        return halo_zero(h)
    if h.kind == HaloKind.RATIONALS:
        return HaloValue(h, q)
    if h.kind == HaloKind.SURDS:
        return HaloValue(h, Surd.rational(q))
    raise MixedHalos(f"{h} has no rational values")


def _check(h: HaloDescriptor, *values: HaloValue) -> None:
    for v in values:
        if v.halo != h:
            raise MixedHalos(f"value of {v.halo} used in {h}")


def halo_add(h: HaloDescriptor, x: HaloValue, y: HaloValue) -> HaloValue:
    _check(h, x, y)
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    if h.kind == HaloKind.TRIVIAL:
        return x
    if h.kind == HaloKind.TROPICAL:
        return HaloValue(h, group_max(x.data, y.data))
    if h.kind in (HaloKind.RATIONALS, HaloKind.SURDS):
        return HaloValue(h, x.data + y.data)
    return HaloValue(h, (
        halo_add(h.first, x.data[0], y.data[0]),
        halo_add(h.second, x.data[1], y.data[1]),
    ))


def halo_mul(h: HaloDescriptor, x: HaloValue, y: HaloValue) -> HaloValue:
    _check(h, x, y)
    if x.is_zero or y.is_zero:
        return halo_zero(h)
    if h.kind == HaloKind.TRIVIAL:
        return x
    if h.kind == HaloKind.TROPICAL:
        return HaloValue(h, group_mul(x.data, y.data))
    if h.kind in (HaloKind.RATIONALS, HaloKind.SURDS):
        return HaloValue(h, x.data * y.data)
    return HaloValue(h, (
        halo_mul(h.first, x.data[0], y.data[0]),
        halo_mul(h.second, x.data[1], y.data[1]),
    ))


def halo_cmp(h: HaloDescriptor, x: HaloValue, y: HaloValue) -> Ordering:
    _check(h, x, y)
    if x.is_zero or y.is_zero:
        return Ordering.of(not x.is_zero, not y.is_zero)
    if h.kind == HaloKind.TRIVIAL:
        return Ordering.EQUAL
    if h.kind == HaloKind.TROPICAL:
        return group_cmp(x.data, y.data)
    if h.kind == HaloKind.RATIONALS:
        return Ordering.of(x.data, y.data)
    if h.kind == HaloKind.SURDS:
        return x.data.compare(y.data)
    verdict = halo_cmp(h.first, x.data[0], y.data[0])
    if verdict != Ordering.EQUAL:
        return verdict
    return halo_cmp(h.second, x.data[1], y.data[1])


def halo_le(h: HaloDescriptor, x: HaloValue, y: HaloValue) -> bool:
    return halo_cmp(h, x, y) != Ordering.GREATER


def halo_max(h: HaloDescriptor, x: HaloValue, y: HaloValue) -> HaloValue:
    return x if halo_cmp(h, x, y) != Ordering.LESS else y


def halo_natural(h: HaloDescriptor, n: int) -> HaloValue:
    """n·1 = 1 + ... + 1, by double-and-add over halo_add."""
    if n < 0:
        raise ValueError(f"negative multiple {n}")
    result, addend = halo_zero(h), halo_one(h)
    while n:
        if n & 1:
            result = halo_add(h, result, addend)
        addend = halo_add(h, addend, addend)
        n >>= 1
    return result


def halo_pow(h: HaloDescriptor, x: HaloValue, n: int) -> HaloValue:
    if n < 0:
        raise ValueError(f"negative power {n}")
    result, base = halo_one(h), x
    while n:
        if n & 1:
            result = halo_mul(h, result, base)
        base = halo_mul(h, base, base)
        n >>= 1
    return result


def is_tropical(h: HaloDescriptor) -> bool:
    """Totally ordered with max as addition (the trivial halo is R_{1})."""
    return h.kind in (HaloKind.TRIVIAL, HaloKind.TROPICAL)


def localized_cmp(
    h: HaloDescriptor, num1: HaloValue, den1: HaloValue, num2: HaloValue, den2: HaloValue
) -> Ordering:
    """Compare num1/den1 with num2/den2 by cross-multiplication."""
    _check(h, num1, den1, num2, den2)
    if den1.is_zero or den2.is_zero:
        raise ZeroDenominator("localized comparison with a zero denominator")
    return halo_cmp(h, halo_mul(h, num1, den2), halo_mul(h, num2, den1))


# Tempered growth

class TemperedTag(Enum):
    TEMPERED = auto()
    NOT_TEMPERED = auto()
    UNKNOWN = auto()


@dataclass(frozen=True)
class TemperedVerdict:
    tag: TemperedTag
    witness: Optional[HaloValue] = None
    bound_poly: Tuple[int, ...] = ()  # natural coefficients, constant term first


def tempered_class(h: HaloDescriptor) -> TemperedVerdict:
    if h.kind != HaloKind.LEX:
        return TemperedVerdict(TemperedTag.TEMPERED)
    first, second = h.first, h.second
    if is_tropical(first) and tempered_class(second).tag == TemperedTag.TEMPERED:
        return TemperedVerdict(TemperedTag.TEMPERED)
    if first.kind == HaloKind.RATIONALS and second.kind == HaloKind.RATIONALS:
        witness = HaloValue(h, (halo_one(first), HaloValue(second, Fraction(2))))
        return TemperedVerdict(TemperedTag.NOT_TEMPERED, witness, (2, 1))
    return TemperedVerdict(TemperedTag.UNKNOWN)


def tempered_witness_check(
    h: HaloDescriptor, x: HaloValue, P: Sequence[int], N: int
) -> bool:
    """True iff x^n ≤ P(n)·1 for every 1 ≤ n ≤ N."""
    _check(h, x)
    if N < 1 or not any(P) or any(c < 0 for c in P):
        raise ValueError("tempered check needs N ≥ 1 and a nonzero natural polynomial")
    one = halo_one(h)
    coefficients = [halo_natural(h, c) for c in P]
    power = one
    n_one = halo_zero(h)
    for _ in range(N):
        power = halo_mul(h, power, x)
        n_one = halo_add(h, n_one, one)
        bound = halo_zero(h)
        for c in reversed(coefficients):
            bound = halo_add(h, halo_mul(h, bound, n_one), c)
        if halo_cmp(h, power, bound) == Ordering.GREATER:
            return False
    return True
