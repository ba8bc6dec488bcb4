"""
Huber's retraction x ↦ x/Δ_x for catalog places.

Each place is given a lexicographic presentation of its value group together
with the image of |2|; Δ_x is then read off with huber_delta.
"""
import logging
from fractions import Fraction
from typing import Tuple

from .errors import UnsupportedPlace
from .halos import HaloKind, halo_cmp, halo_one
from .ordered_groups import (
    GroupElement,
    OrderedGroupDescriptor,
    group_identity,
    huber_delta,
    quotient_by_convex,
)
from .places import PlaceDescriptor, PlaceKind, evaluate, huber_quotient, is_catalog

logger = logging.getLogger(__name__)

TRIVIAL_GROUP = OrderedGroupDescriptor.of()
LOG_GROUP = OrderedGroupDescriptor.of('log')


def _sign_realization(place) -> GroupElement:
    """|2| in a rank-1 group where only the side of 1 matters."""
    h = place.codomain
    two = evaluate(place, 2)
    if two.is_zero:
        return group_identity(LOG_GROUP)
    verdict = halo_cmp(h, two, halo_one(h))
    return GroupElement(LOG_GROUP, (Fraction(verdict.value),))


def value_group_presentation(place: PlaceDescriptor) -> Tuple[OrderedGroupDescriptor, GroupElement]:
    """(Γ, |2|) with Γ a lex ℚ^k; a zero |2| is presented by the identity."""
    h = place.codomain
    if h.kind == HaloKind.TRIVIAL:
        return TRIVIAL_GROUP, group_identity(TRIVIAL_GROUP)
    if h.kind == HaloKind.TROPICAL:
        two = evaluate(place, 2)
        return h.group, (group_identity(h.group) if two.is_zero else two.data)
    if h.kind in (HaloKind.RATIONALS, HaloKind.SURDS):
        return LOG_GROUP, _sign_realization(place)
    # |2| = (q^0, 2): the archimedean coordinate is the only one that moves
    if place.kind == PlaceKind.ARCH_INFINITESIMAL:
        group = OrderedGroupDescriptor.of('log', 'q')
        return group, GroupElement(group, (Fraction(1), Fraction(0)))
    group = OrderedGroupDescriptor.of('q', 'log')
    return group, GroupElement(group, (Fraction(0), Fraction(1)))


def huber_retract(place):
    if not is_catalog(place):
        raise UnsupportedPlace(f"{place} has no value group presentation")
    group, two = value_group_presentation(place)
    delta = huber_delta(group, two)
    if delta.is_trivial:
        return place
    quotient, _ = quotient_by_convex(group, delta)
    logger.debug(f"retracting {place} onto {quotient.labels}")
    if quotient.labels != ('log',):
        raise UnsupportedPlace(f"cannot realize the quotient {quotient.labels} of {place}")
    return huber_quotient(place)

