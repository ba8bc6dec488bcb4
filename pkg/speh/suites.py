"""
Randomized property suites behind the `check` command.

Each suite draws from its own random.Random seeded with "<seed>:<name>", so a
report depends only on (seed, trials, suite list).
"""
import logging
import random
import time
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from sympy import primerange

from . import config
from .affine_line import classify_affine_point, is_analytic
from .classification import (
    CheckResult,
    check_multiplicative_on,
    check_power_multiplicative_on,
    check_prearchimedean_on,
    check_square_multiplicative_on,
    check_seminorm_axioms_on,
    check_ultrametric_on,
    classify_on_Z,
    equivalent_oracle,
    increasing_on_naturals,
    is_nonarchimedean,
    mult_bounded_by,
    negation_symmetry_check,
    sorted_pairs,
    ZClassTag,
)
from .halos import (
    HaloDescriptor,
    HaloKind,
    HaloValue,
    TemperedTag,
    halo_add,
    halo_cmp,
    halo_mul,
    halo_one,
    halo_zero,
    is_tropical,
    tempered_class,
    tempered_witness_check,
)
from .ordered_groups import (
    GroupElement,
    OrderedGroupDescriptor,
    Ordering,
    contains,
    group_cmp,
    group_identity,
    group_inv,
    group_mul,
    huber_delta,
    squeezed,
)
from .places import (
    MajorKind,
    MajorSubset,
    arch_eval,
    arch_infinitesimal,
    arch_infinity,
    archimedean_z,
    composite_adic,
    composite_residual,
    evaluate,
    gauss_point,
    hk_case4,
    padic_eval,
    padic_real,
    padic_trop,
    residual,
    trivial_on,
)
from .retraction import huber_retract
from .rings import RingKind, gaussian_taylor_norms, ord_p, qx, zx
from .sheaf import (
    RingDescriptor,
    completed_add,
    completed_mul,
    completion_map,
    germ_at,
    sections_on_domain,
)
from .spectra import (
    domain_intersection,
    domain_membership,
    rational_domain,
    spev_subset_check,
    speh_points_of_Z,
)
from .surds import Surd

logger = logging.getLogger(__name__)

Suite = Callable[[random.Random, int], CheckResult]


# Generators

def random_fraction(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_int_poly(rng: random.Random, max_degree: int = 8, span: int = 30) -> List[int]:
    coeffs = [rng.randint(-span, span) for _ in range(rng.randint(0, max_degree) + 1)]
    if not coeffs[-1]:
        coeffs[-1] = rng.choice([-1, 1]) * rng.randint(1, span)
    return coeffs


def _random_unit(rng: random.Random, h: HaloDescriptor):
    if h.kind == HaloKind.TRIVIAL:
        return 1
    if h.kind == HaloKind.TROPICAL:
        return GroupElement(h.group, tuple(random_fraction(rng, 4) for _ in range(h.group.rank)))
    if h.kind == HaloKind.RATIONALS:
        return Fraction(rng.randint(1, 30), rng.randint(1, 30))
    if h.kind == HaloKind.SURDS:
        terms = [(rng.choice([1, 2, 3, 5, 6]), Fraction(rng.randint(1, 9), rng.randint(1, 4)))
                 for _ in range(rng.randint(1, 2))]
        return Surd.from_terms(terms)
    return (HaloValue(h.first, _random_unit(rng, h.first)),
            HaloValue(h.second, _random_unit(rng, h.second)))


def random_value(rng: random.Random, h: HaloDescriptor) -> HaloValue:
    if rng.random() < 0.1:
        return halo_zero(h)
    return HaloValue(h, _random_unit(rng, h))


CATALOG_HALOS = (
    HaloDescriptor.trivial(),
    HaloDescriptor.tropical(OrderedGroupDescriptor.of('x')),
    HaloDescriptor.tropical(OrderedGroupDescriptor.of('x', 'y')),
    HaloDescriptor.rationals(),
    HaloDescriptor.surds(),
    HaloDescriptor.lex(HaloDescriptor.rationals(), HaloDescriptor.rationals()),
    HaloDescriptor.lex(HaloDescriptor.tropical(OrderedGroupDescriptor.of('q')), HaloDescriptor.surds()),
)


def z_places(prime_bound: int = 7) -> list:
    out = [trivial_on(RingKind.Z), archimedean_z()]
    for p in (2, 3, 5, 7):
        if p <= prime_bound:
            out += [padic_real(p), padic_trop(p), residual(p)]
    return out


def line_places() -> list:
    return [
        padic_eval(3, Fraction(1, 2)),
        gauss_point(2, 0, 0),
        gauss_point(3, Fraction(1, 3), -1),
        hk_case4(5, 1, MajorSubset(MajorKind.EMPTY)),
        hk_case4(5, 1, MajorSubset(MajorKind.ALL)),
        hk_case4(5, 1, MajorSubset(MajorKind.CUT, Fraction(1, 5))),
        arch_eval(2),
        arch_eval((0, 1)),
        arch_infinitesimal(1),
        arch_infinity(),
    ]


def _first_failure(checks: Iterable[CheckResult]) -> CheckResult:
    for result in checks:
        if not result:
            return result
    return CheckResult.ok()


# Suites

def halo_axioms(rng: random.Random, trials: int) -> CheckResult:
    for h in CATALOG_HALOS:
        result = halo_laws_on(rng, h, trials)
        if not result:
            return result
    return CheckResult.ok()


def halo_laws_on(rng: random.Random, h: HaloDescriptor, trials: int) -> CheckResult:
    for _ in range(trials):
        x, y, z = (random_value(rng, h) for _ in range(3))
        zero, one = halo_zero(h), halo_one(h)
        laws = [
            halo_add(h, x, y) == halo_add(h, y, x),
            halo_mul(h, x, y) == halo_mul(h, y, x),
            halo_add(h, halo_add(h, x, y), z) == halo_add(h, x, halo_add(h, y, z)),
            halo_mul(h, halo_mul(h, x, y), z) == halo_mul(h, x, halo_mul(h, y, z)),
            halo_mul(h, x, halo_add(h, y, z)) == halo_add(h, halo_mul(h, x, y), halo_mul(h, x, z)),
            halo_add(h, x, zero) == x and halo_mul(h, x, one) == x,
            halo_mul(h, x, zero) == zero,
            halo_cmp(h, x, y) == halo_cmp(h, y, x).flip(),
            halo_cmp(h, zero, x) != Ordering.GREATER,
        ]
        if halo_cmp(h, x, y) != Ordering.GREATER:
            laws.append(halo_cmp(h, halo_mul(h, x, z), halo_mul(h, y, z)) != Ordering.GREATER)
            # componentwise addition over an idempotent first factor is not monotone
            if h.kind != HaloKind.LEX or not is_tropical(h.first):
                laws.append(halo_cmp(h, halo_add(h, x, z), halo_add(h, y, z)) != Ordering.GREATER)
        if not all(laws):
            return CheckResult.fail(str(h), str(x.data), str(y.data), str(z.data))
    return CheckResult.ok()


def tempered(rng: random.Random, trials: int) -> CheckResult:
    rat = HaloDescriptor.rationals()
    trop = HaloDescriptor.tropical(OrderedGroupDescriptor.of('q'))
    expected = {
        HaloDescriptor.trivial(): TemperedTag.TEMPERED,
        trop: TemperedTag.TEMPERED,
        rat: TemperedTag.TEMPERED,
        HaloDescriptor.surds(): TemperedTag.TEMPERED,
        HaloDescriptor.lex(trop, rat): TemperedTag.TEMPERED,
        HaloDescriptor.lex(rat, rat): TemperedTag.NOT_TEMPERED,
        HaloDescriptor.lex(HaloDescriptor.surds(), HaloDescriptor.surds()): TemperedTag.UNKNOWN,
    }
    for h, tag in expected.items():
        if tempered_class(h).tag != tag:
            return CheckResult.fail(str(h))
    verdict = tempered_class(HaloDescriptor.lex(rat, rat))
    N = min(trials, config.TEMPERED_CHECK_BOUND)
    if not tempered_witness_check(verdict.witness.halo, verdict.witness, verdict.bound_poly, N):
        return CheckResult.fail('witness', N)
    # in ℚ₊ itself, x > 1 eventually beats every polynomial
    for _ in range(min(trials, 50)):
        x = Fraction(rng.randint(11, 40), 10)
        if tempered_witness_check(rat, HaloValue(rat, x), (2, 1), 200):
            return CheckResult.fail(str(x))
    return CheckResult.ok()


def ordered_groups(rng: random.Random, trials: int) -> CheckResult:
    G = OrderedGroupDescriptor.of('a', 'b', 'c')

    def draw() -> GroupElement:
        return GroupElement(G, tuple(Fraction(rng.randint(-3, 3)) for _ in range(3)))

    for _ in range(trials):
        a, b, c = draw(), draw(), draw()
        if group_mul(a, group_inv(a)) != group_identity(G):
            return CheckResult.fail(str(a.exponents))
        if group_cmp(a, b) != Ordering.GREATER and \
                group_cmp(group_mul(a, c), group_mul(b, c)) == Ordering.GREATER:
            return CheckResult.fail(str(a.exponents), str(b.exponents), str(c.exponents))
        delta = huber_delta(G, a)
        if contains(delta, b) and not squeezed(a, b, 20):
            return CheckResult.fail('delta', str(a.exponents), str(b.exponents))
    return CheckResult.ok()


def classification(rng: random.Random, trials: int) -> CheckResult:
    for p in map(int, primerange(2, 101)):
        for place, tag in ((padic_real(p), ZClassTag.PADIC), (padic_trop(p), ZClassTag.PADIC),
                           (residual(p), ZClassTag.RESIDUAL)):
            result = classify_on_Z(place)
            if result.tag != tag or result.p != p:
                return CheckResult.fail(str(place), str(result))
    if classify_on_Z(archimedean_z()).tag != ZClassTag.ARCHIMEDEAN:
        return CheckResult.fail('archimedean')
    if classify_on_Z(trivial_on(RingKind.Z), prime_bound=50).tag != ZClassTag.TRIVIAL:
        return CheckResult.fail('trivial')
    points = speh_points_of_Z(100)
    for i, x in enumerate(points):
        for y in points[i + 1:]:
            if equivalent_oracle(x.place, y.place):
                return CheckResult.fail(str(x), str(y))
    count = config.ACCEPTANCE_SAMPLES
    for p in (2, 3, 5):
        triples = [tuple(rng.randint(-500, 500) or 1 for _ in range(3)) for _ in range(count)]
        both = _first_failure([
            mult_bounded_by(padic_trop(p), padic_real(p), triples),
            mult_bounded_by(padic_real(p), padic_trop(p), triples),
        ])
        if not both:
            return both
    return CheckResult.ok()


def ostrowski(rng: random.Random, trials: int) -> CheckResult:
    place = archimedean_z()
    count = config.ACCEPTANCE_SAMPLES
    pairs = [(rng.randint(-10 ** 6, 10 ** 6), rng.randint(-10 ** 6, 10 ** 6)) for _ in range(count)]
    return _first_failure([
        check_prearchimedean_on(place, pairs),
        increasing_on_naturals(place, count),
    ])


def nonarchimedean(rng: random.Random, trials: int) -> CheckResult:
    count = min(trials, 500)
    for place in z_places():
        pairs = [(rng.randint(-1000, 1000), rng.randint(-1000, 1000)) for _ in range(count)] + [(1, 1)]
        if is_nonarchimedean(place) != bool(check_ultrametric_on(place, pairs)):
            return CheckResult.fail(str(place))
    for place in line_places():
        pairs = [(qx(random_int_poly(rng, 3, 9)), qx(random_int_poly(rng, 3, 9)))
                 for _ in range(count // 10)] + [(qx([1]), qx([1]))]
        if is_nonarchimedean(place) != bool(check_ultrametric_on(place, pairs)):
            return CheckResult.fail(str(place))
    return CheckResult.ok()


def composite(rng: random.Random, trials: int) -> CheckResult:
    place = composite_adic(6)
    if evaluate(place, 6).data != Fraction(1, 6):
        return CheckResult.fail('|6|_6')
    elems = range(1, min(10 ** 4, 10 * trials) + 1)
    power = check_power_multiplicative_on(place, elems, 6)
    if not power:
        return power
    square = check_square_multiplicative_on(composite_residual(6), elems)
    if not square:
        return square
    first = check_multiplicative_on(place, sorted_pairs(list(range(1, 13))))
    if first.passed or first.counterexample != (2, 3):
        return CheckResult.fail('expected (2, 3)', first.counterexample)
    return CheckResult.ok()


def _coefficient_max(coeffs: Sequence[int], p: int) -> Fraction:
    return max(Fraction(-ord_p(c, p)) for c in coeffs if c)


def hk_valuations(rng: random.Random, trials: int) -> CheckResult:
    count = min(trials, 500)
    places = [padic_eval(3, 2), gauss_point(3, Fraction(1, 3), Fraction(1, 2)),
              hk_case4(3, 1, MajorSubset(MajorKind.EMPTY)),
              hk_case4(3, 1, MajorSubset(MajorKind.ALL)),
              hk_case4(3, 1, MajorSubset(MajorKind.CUT, Fraction(1, 3)))]
    for place in places:
        pairs = []
        for _ in range(count // len(places) + 1):
            f, g = random_int_poly(rng), random_int_poly(rng)
            pairs.append((zx(f), zx(g)))
        result = check_multiplicative_on(place, pairs)
        if not result:
            return CheckResult.fail(str(place), *(str(e) for e in result.counterexample))
    gauss = gauss_point(5, 0, 0)
    for _ in range(count):
        coeffs = random_int_poly(rng)
        if evaluate(gauss, zx(coeffs)).data.exponents[0] != _coefficient_max(coeffs, 5):
            return CheckResult.fail('gauss oracle', str(coeffs))
    return CheckResult.ok()


def archimedean_line(rng: random.Random, trials: int) -> CheckResult:
    count = min(trials, 500)
    a = (Fraction(1), Fraction(0))
    inf, infinity = arch_infinitesimal(a), arch_infinity()
    for _ in range(count):
        coeffs = random_int_poly(rng, 6, 9)
        norms = gaussian_taylor_norms(coeffs, a)
        i0 = next(i for i, c in enumerate(norms) if c)
        value = evaluate(inf, zx(coeffs))
        if value.data[0].data.exponents[0] != -i0 or value.data[1].data != Surd.sqrt_of_rational(norms[i0]):
            return CheckResult.fail(str(inf), str(coeffs))
        lead = evaluate(infinity, zx(coeffs))
        if lead.data[0].data.exponents[0] != len(coeffs) - 1 or \
                lead.data[1].data != Surd.rational(abs(coeffs[-1])):
            return CheckResult.fail('arch_infinity', str(coeffs))
    return CheckResult.ok()


def huber(rng: random.Random, trials: int) -> CheckResult:
    count = min(trials, 100)
    center = rng.randint(-3, 3)
    retracted, target = huber_retract(arch_infinitesimal(center)), arch_eval(center)
    for _ in range(count):
        coeffs = random_int_poly(rng, 5, 9)
        elem = zx(coeffs)
        if evaluate(target, elem).is_zero:
            continue
        if evaluate(retracted, elem) != evaluate(target, elem):
            return CheckResult.fail('retract', str(coeffs))
    for place in z_places() + line_places():
        once = huber_retract(place)
        if huber_retract(once) != once:
            return CheckResult.fail('idempotent', str(place))
        if is_nonarchimedean(place) and once != place:
            return CheckResult.fail('identity', str(place))
    return CheckResult.ok()


def _random_domain(rng: random.Random):
    numerators = [rng.choice([0, 1, 2, 3, 5, 6, 10, 15]) for _ in range(rng.randint(0, 2))]
    return rational_domain(numerators, rng.choice([1, 2, 3, 5, 6, 7, 10]))


def topology(rng: random.Random, trials: int) -> CheckResult:
    points = speh_points_of_Z(50)
    for _ in range(min(trials, 200)):
        first, second = _random_domain(rng), _random_domain(rng)
        both = domain_intersection(first, second)
        for x in points:
            expected = domain_membership(x, first) and domain_membership(x, second)
            if domain_membership(x, both) != expected:
                return CheckResult.fail(str(first), str(second), str(x))
    for x in points:
        if spev_subset_check(x) != is_nonarchimedean(x.place):
            return CheckResult.fail(str(x))
    return CheckResult.ok()


def sheaf(rng: random.Random, trials: int) -> CheckResult:
    golden = [
        (rational_domain([0], 6), RingDescriptor.localized(6)),
        (rational_domain([2], 1), RingDescriptor.padic_integers(2)),
        (domain_intersection(rational_domain([0], 3), rational_domain([3], 1)),
         RingDescriptor.padic_field(3)),
        (rational_domain([1], 2), RingDescriptor.real()),
    ]
    for domain, ring in golden:
        if sections_on_domain(domain) != ring:
            return CheckResult.fail(str(domain))
    for x in speh_points_of_Z(5):
        germ_at(x)
    for p in (2, 3, 5):
        target = RingDescriptor.padic_integers(p)
        for _ in range(min(trials, 500)):
            a = Fraction(rng.randint(-999, 999), rng.choice([1, 7, 11, 13]))
            b = Fraction(rng.randint(-999, 999), rng.choice([1, 7, 11, 13]))
            ma, mb = completion_map(a, target, 8), completion_map(b, target, 8)
            if completion_map(a + b, target, 8) != completed_add(ma, mb) or \
                    completion_map(a * b, target, 8) != completed_mul(ma, mb):
                return CheckResult.fail(p, str(a), str(b))
    return CheckResult.ok()


def negation_symmetry(rng: random.Random, trials: int, extra_places: Sequence = ()) -> CheckResult:
    elems = [rng.randint(-10 ** 4, 10 ** 4) for _ in range(min(trials, 1000))]
    for place in list(z_places()) + list(extra_places):
        result = negation_symmetry_check(place, elems)
        if not result:
            return CheckResult.fail(str(place), *result.counterexample)
    return CheckResult.ok()


def affine_taxonomy(rng: random.Random, trials: int) -> CheckResult:
    non_analytic = {'hk_case4:empty', 'hk_case4:all', 'arch_infinitesimal', 'arch_infinity'}
    for place in line_places():
        key = place.kind.value
        if place.major is not None:
            key += f":{place.major.kind.value}"
        if is_analytic(classify_affine_point(place)).analytic == (key in non_analytic):
            return CheckResult.fail(str(place))
        pairs = [(zx(random_int_poly(rng, 4, 9)), zx(random_int_poly(rng, 4, 9))) for _ in range(5)]
        if not check_seminorm_axioms_on(place, pairs):
            return CheckResult.fail('axioms', str(place))
    return CheckResult.ok()


SUITES: Dict[str, Suite] = {
    'halo_axioms': halo_axioms,
    'tempered': tempered,
    'ordered_groups': ordered_groups,
    'classification': classification,
    'ostrowski': ostrowski,
    'nonarchimedean': nonarchimedean,
    'composite': composite,
    'hk_valuations': hk_valuations,
    'archimedean_line': archimedean_line,
    'huber': huber,
    'topology': topology,
    'sheaf': sheaf,
    'affine_taxonomy': affine_taxonomy,
    'negation_symmetry': negation_symmetry,
}


def check_suites(seed: Optional[int] = None, trials: Optional[int] = None,
                 suites: Optional[Sequence[str]] = None, extra_places: Sequence = ()) -> dict:
    """Run the named suites (all by default) and report pass/fail per suite.

    extra_places are added to the negation-symmetry suite, so a deliberately
    broken place can be shown to fail it.
    """
    seed = config.DEFAULT_SEED if seed is None else seed
    trials = config.DEFAULT_TRIALS if trials is None else trials
    names = list(suites) if suites else list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {', '.join(unknown)}")

    report = {}
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        started = time.perf_counter()
        if name == 'negation_symmetry':
            result = negation_symmetry(rng, trials, extra_places)
        else:
            result = SUITES[name](rng, trials)
        logger.info(f"suite {name}: {'ok' if result else 'FAILED'} in {time.perf_counter() - started:.2f}s")
        report[name] = {
            'passed': result.passed,
            'counterexample': None if result.passed else [str(e) for e in result.counterexample],
        }
    return {
        'seed': seed,
        'trials': trials,
        'passed': all(r['passed'] for r in report.values()),
        'suites': report,
    }
