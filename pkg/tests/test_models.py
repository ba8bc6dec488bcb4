from fractions import Fraction

import pytest

from speh.errors import ParseError
from speh.halos import HaloDescriptor, HaloValue
from speh.models import (
    AdeleSpec,
    DiscSpec,
    DomainSpec,
    ElementSpec,
    MajorSpec,
    PlaceSpec,
    RingSpec,
    ValueSpec,
    fraction,
)
from speh.places import (
    MajorKind,
    MajorSubset,
    arch_infinitesimal,
    composite_adic,
    evaluate,
    hk_case4,
    padic_real,
    padic_trop,
)
from speh.rings import integer, qx_fraction, zx
from speh.sheaf import RingDescriptor, adele_diagonal
from speh.spectra import rational_domain
from speh.surds import Surd


def test_fraction():
    assert fraction('1/6') == Fraction(1, 6)
    assert fraction(4) == Fraction(4)
    for bad in ('abc', True, 1.5, '1/0'):
        with pytest.raises(ParseError):
            fraction(bad)


def test_elements():
    assert ElementSpec.parse({'ring': 'Z', 'n': '12'}) == integer(12)
    assert ElementSpec.parse({'ring': 'ZX', 'coeffs': [1, '2']}) == zx([1, 2])
    f = qx_fraction([1], [0, 1])
    assert ElementSpec.parse(ElementSpec.dump(f)) == f
    with pytest.raises(ParseError):
        ElementSpec.parse({'ring': 'Z', 'n': '1/2'})
    with pytest.raises(ParseError):
        ElementSpec.parse({'ring': 'R', 'n': '1'})


def test_places():
    assert PlaceSpec.parse({'place': 'padic_real', 'p': 7}) == padic_real(7)
    cut = hk_case4(5, 1, MajorSubset(MajorKind.CUT, Fraction(1, 5)))
    assert PlaceSpec.parse(PlaceSpec.dump(cut)) == cut
    assert PlaceSpec.dump(arch_infinitesimal((1, 2))) == {'place': 'arch_infinitesimal', 'center': ['1', '2']}


@pytest.mark.parametrize('payload', [
    {'place': 'padic_real', 'p': 4},
    {'place': 'padic_real'},
    {'place': 'nowhere'},
    {'place': 'composite_adic', 'm': 7},
    {'place': 'fp_residual', 'p': 2, 'modulus': [1, 0, 1]},
    {'place': 'hk_case4', 'p': 5, 'center': '0', 'major': 'some'},
])
def test_bad_places(payload):
    with pytest.raises(ParseError):
        PlaceSpec.parse(payload)


def test_compact_values():
    assert ValueSpec.compact(evaluate(composite_adic(6), 6)) == '1/6'
    assert ValueSpec.compact(evaluate(padic_trop(2), 2)) == '2^-1'
    assert ValueSpec.compact(evaluate(padic_trop(2), 3)) == '1'
    assert ValueSpec.compact(evaluate(padic_real(2), 0)) == '0'
    assert ValueSpec.compact(evaluate(arch_infinitesimal(0), zx([0, 2]))) == '(q^-1, 2)'


def test_value_payloads():
    value = evaluate(arch_infinitesimal(0), zx([1, 2]))
    assert ValueSpec.dump(value) == {
        'halo': {'kind': 'lex', 'first': {'kind': 'tropical', 'labels': ['q']}, 'second': {'kind': 'surds'}},
        'value': {'unit': [['0'], [['1', 1]]]},
    }
    assert ValueSpec.parse(ValueSpec.dump(value)) == value
    assert ValueSpec.dump(evaluate(padic_real(2), 0)) == {'halo': {'kind': 'rationals'}, 'value': 'zero'}


def test_value_literals():
    rat, surds = HaloDescriptor.rationals(), HaloDescriptor.surds()
    assert ValueSpec.parse({'halo': {'kind': 'rationals'}, 'value': 'zero'}) == HaloValue(rat)
    assert ValueSpec.parse({'halo': {'kind': 'rationals'}, 'value': {'unit': '1/4'}}) == \
        HaloValue(rat, Fraction(1, 4))
    three_root_two = {'halo': {'kind': 'surds'}, 'value': {'unit': [['3', 2]]}}
    assert ValueSpec.parse(three_root_two) == HaloValue(surds, Surd.from_terms([(2, 3)]))
    assert ValueSpec.dump(ValueSpec.parse(three_root_two)) == three_root_two
    assert ValueSpec.parse({'halo': {'kind': 'surds'}, 'value': {'unit': [['1', 8]]}}) == \
        HaloValue(surds, Surd.from_terms([(2, 2)]))


@pytest.mark.parametrize('payload', [
    {'halo': {'kind': 'rationals'}, 'value': '1/4'},
    {'halo': {'kind': 'rationals'}, 'value': {'unit': '-1'}},
    {'halo': {'kind': 'rationals'}, 'value': None},
    {'halo': {'kind': 'rationals'}},
    {'halo': {'kind': 'surds'}, 'value': {'unit': [['1', '1/2']]}},
    {'halo': {'kind': 'complex'}, 'value': 'zero'},
])
def test_bad_values(payload):
    with pytest.raises(ParseError):
        ValueSpec.parse(payload)


def test_majors():
    assert MajorSpec.parse('all') == MajorSubset(MajorKind.ALL)
    assert MajorSpec.dump(MajorSpec.parse({'cut': '3'})) == {'cut': '3'}
    with pytest.raises(ParseError):
        MajorSpec.parse(3)
    with pytest.raises(ParseError):
        MajorSpec.parse({'cut': '0'})


def test_discs_and_domains():
    disc = DiscSpec.parse({'center': '1/2', 'radiusExp': '-1', 'kind': 'open'})
    assert DiscSpec.dump(disc) == {'center': '1/2', 'radiusExp': '-1', 'kind': 'open'}
    with pytest.raises(ParseError):
        DiscSpec.parse({'center': '0', 'radius': '-1'})
    domain = DomainSpec.parse({'num': ['0'], 'den': '6'})
    assert domain == rational_domain([0], 6)
    assert DomainSpec.dump(domain) == {'ring': 'Z', 'num': ['0'], 'den': '6', 'strict': True}
    with pytest.raises(ParseError):
        DomainSpec.parse({'num': ['1'], 'den': '0'})
    with pytest.raises(ParseError):
        DomainSpec.parse({'num': '1', 'den': '2'})


def test_rings():
    ring = RingDescriptor.product([RingDescriptor.padic_integers(2), RingDescriptor.real()])
    dumped = RingSpec.dump(ring)
    assert dumped['name'] == 'Z_2 x R'
    assert RingSpec.parse(dumped) == ring
    assert RingSpec.dump(RingDescriptor.localized(6)) == {
        'ring': 'localized', 'name': 'Z[1/6]', 'm': 6, 'topology': 'discrete',
    }


def test_adeles():
    adele = adele_diagonal(Fraction(1, 6), 6, 4)
    dumped = AdeleSpec.dump(adele)
    assert dumped['exceptional']['2'] == {'p': 2, 'k': 4, 'residue': '11', 'val': -1}
    assert AdeleSpec.parse(dumped) == adele
    with pytest.raises(ParseError):
        AdeleSpec.parse({'exceptional': {'4': dumped['exceptional']['2']}, 'real': ['0', '1']})
    with pytest.raises(ParseError):
        AdeleSpec.parse({'exceptional': {}, 'real': ['1', '0']})
