"""
Lexicographically ordered groups ℚ^k used as Krull value groups.

Groups are written multiplicatively: an element is its exponent vector, the
identity is the zero vector and coordinate 0 is the most significant one.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Tuple

from .errors import IdentityElement, MixedGroups


class Ordering(Enum):
    """Verdict of a total-order comparison."""
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> 'Ordering':
        """Compare two natively ordered python values."""
        if a < b:
            return cls.LESS
        if a > b:
            return cls.GREATER
        return cls.EQUAL

    def flip(self) -> 'Ordering':
        return Ordering(-self.value)


@dataclass(frozen=True)
class OrderedGroupDescriptor:
    rank: int
    labels: Tuple[str, ...]

    def __post_init__(self):
        if self.rank < 0 or len(self.labels) != self.rank:
            raise MixedGroups(f"rank {self.rank} does not match labels {self.labels}")

    @classmethod
    def of(cls, *labels: str) -> 'OrderedGroupDescriptor':
        return cls(len(labels), tuple(labels))


@dataclass(frozen=True)
class GroupElement:
    group: OrderedGroupDescriptor
    exponents: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.exponents) != self.group.rank:
            raise MixedGroups(
                f"{len(self.exponents)} exponents for a group of rank {self.group.rank}"
            )
        object.__setattr__(self, 'exponents', tuple(Fraction(e) for e in self.exponents))

    @property
    def is_identity(self) -> bool:
        return not any(self.exponents)

    def leading_index(self) -> int:
        """Index of the most significant nonzero exponent."""
        for i, e in enumerate(self.exponents):
            if e:
                return i
        raise IdentityElement("the identity has no leading coordinate")


@dataclass(frozen=True)
class ConvexSubgroup:
    """The suffix block {0}^cut_index × ℚ^(k - cut_index)."""
    group: OrderedGroupDescriptor
    cut_index: int

    def __post_init__(self):
        if not 0 <= self.cut_index <= self.group.rank:
            raise MixedGroups(f"cut index {self.cut_index} outside 0..{self.group.rank}")

    @property
    def is_trivial(self) -> bool:
        return self.cut_index == self.group.rank


def element(group: OrderedGroupDescriptor, *exponents) -> GroupElement:
    return GroupElement(group, tuple(Fraction(e) for e in exponents))


def group_identity(group: OrderedGroupDescriptor) -> GroupElement:
    return GroupElement(group, (Fraction(0),) * group.rank)


def _same_group(a: GroupElement, b: GroupElement) -> None:
    if a.group != b.group:
        raise MixedGroups(f"{a.group.labels} vs {b.group.labels}")


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    _same_group(a, b)
    return GroupElement(a.group, tuple(x + y for x, y in zip(a.exponents, b.exponents)))


def group_inv(a: GroupElement) -> GroupElement:
    return GroupElement(a.group, tuple(-x for x in a.exponents))


def group_pow(a: GroupElement, n) -> GroupElement:
    """a^n for a rational exponent n (ℚ^k is divisible)."""
    n = Fraction(n)
    return GroupElement(a.group, tuple(x * n for x in a.exponents))


def group_cmp(a: GroupElement, b: GroupElement) -> Ordering:
    _same_group(a, b)
    # tuples of Fractions already compare lexicographically
    return Ordering.of(a.exponents, b.exponents)


def group_max(a: GroupElement, b: GroupElement) -> GroupElement:
    return a if group_cmp(a, b) != Ordering.LESS else b


def convex_subgroup_generated(g: GroupElement) -> ConvexSubgroup:
    """Smallest convex subgroup containing g."""
    if g.is_identity:
        raise IdentityElement("the identity generates the trivial subgroup")
    return ConvexSubgroup(g.group, g.leading_index())


def contains(H: ConvexSubgroup, g: GroupElement) -> bool:
    if g.group != H.group:
        raise MixedGroups(f"{g.group.labels} vs {H.group.labels}")
    return not any(g.exponents[:H.cut_index])


def quotient_by_convex(
    G: OrderedGroupDescriptor, H: ConvexSubgroup
) -> Tuple[OrderedGroupDescriptor, Callable[[GroupElement], GroupElement]]:
    """Quotient G/H with its projection (truncation to the first cut_index coordinates)."""
    if H.group != G:
        raise MixedGroups(f"subgroup of {H.group.labels} used with {G.labels}")
    j = H.cut_index
    quotient = OrderedGroupDescriptor(j, G.labels[:j])

    def projection(g: GroupElement) -> GroupElement:
        if g.group != G:
            raise MixedGroups(f"{g.group.labels} vs {G.labels}")
        return GroupElement(quotient, g.exponents[:j])

    return quotient, projection


def huber_delta(G: OrderedGroupDescriptor, two_value: GroupElement) -> ConvexSubgroup:
    """Greatest convex subgroup of G not containing |2|.

    Trivial when |2| ≤ 1; otherwise every suffix block strictly below the
    leading coordinate of |2| is squeezed between max(1,|2|)^-1 and max(1,|2|).
    """
    if two_value.group != G:
        raise MixedGroups(f"{two_value.group.labels} vs {G.labels}")
    if group_cmp(two_value, group_identity(G)) != Ordering.GREATER:
        return ConvexSubgroup(G, G.rank)
    return ConvexSubgroup(G, two_value.leading_index() + 1)


def squeezed(two_value: GroupElement, gamma: GroupElement, n_max: int = 100) -> bool:
    """Bounded check of max(1,|2|)^-1 ≤ γ^n ≤ max(1,|2|) for 1 ≤ n ≤ n_max."""
    top = group_max(two_value, group_identity(two_value.group))
    bottom = group_inv(top)
    for n in range(1, n_max + 1):
        power = group_pow(gamma, n)
        if group_cmp(power, bottom) == Ordering.LESS or group_cmp(power, top) == Ordering.GREATER:
            return False
    return True

