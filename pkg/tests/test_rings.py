from fractions import Fraction

import pytest

from speh.errors import DomainMismatch, ZeroDenominator
from speh.rings import (
    RingKind,
    coerce,
    evaluate_at,
    fp_order,
    has_root_in_closed_disc,
    integer,
    newton_slopes,
    ord_p,
    qx,
    qx_fraction,
    ring_add,
    ring_mul,
    ring_neg,
    taylor_coefficients,
    zx,
)


def test_ord_p():
    assert ord_p(12, 2) == 2
    assert ord_p(Fraction(5, 18), 3) == -2
    assert ord_p(0, 5) is None
    assert ord_p(36, 6) == 2


def test_integer_rejects_fractions():
    with pytest.raises(DomainMismatch):
        integer(Fraction(1, 2))
    with pytest.raises(DomainMismatch):
        zx([Fraction(1, 2)])


def test_polynomial_arithmetic():
    p = zx([1, 1])
    assert ring_mul(p, p) == zx([1, 2, 1])
    assert ring_add(p, ring_neg(p)).is_zero
    assert ring_add(p, 2) == zx([3, 1])


def test_rational_function_normalized():
    f = qx_fraction([-1, 0, 1], [-1, 1])
    assert f == qx_fraction([1, 1], [1])
    with pytest.raises(ZeroDenominator):
        qx_fraction([1], [0])


def test_coerce_reduces_mod_p():
    assert coerce(zx([5, 7]), RingKind.FPX, 3).coeffs == (Fraction(2), Fraction(1))
    with pytest.raises(DomainMismatch):
        coerce(qx([Fraction(1, 2)]), RingKind.Z)


def test_taylor_and_evaluation():
    coeffs = (Fraction(1), Fraction(2), Fraction(1))
    assert taylor_coefficients(coeffs, -1) == (Fraction(0), Fraction(0), Fraction(1))
    assert evaluate_at(coeffs, 3) == 16


def test_newton_polygon():
    # X^2 - 4: both roots have 2-adic valuation 1
    assert newton_slopes([-4, 0, 1], 2) == [(Fraction(-1), 2)]
    assert has_root_in_closed_disc([-4, 0, 1], 2, 0, -1)
    assert not has_root_in_closed_disc([-4, 0, 1], 2, 0, -2)


def test_fp_order():
    assert fp_order(2, [1, 1], [1, 0, 1]) == 2
    assert fp_order(2, [1, 1], [1, 1, 1]) == 0
    assert fp_order(2, [1, 1], []) is None
