from fractions import Fraction

import pytest

from permdom.counting import f1
from permdom.errors import IndexOutOfRange, UnsupportedOffset
from permdom.sequences import (
    RationalPolynomial,
    lift_families,
    lift_polynomial,
    sequence_table,
    st,
    st_closed_form,
)


def test_polynomial_arithmetic():
    p = RationalPolynomial.of(1, 2)  # 1 + 2k
    q = RationalPolynomial.of(0, 0, Fraction(1, 2))
    assert (p + q)(2) == 1 + 4 + 2
    assert p.shift_argument(-1)(5) == p(4)
    assert p.scale(3).coefficients == (Fraction(3), Fraction(6))
    assert RationalPolynomial.of(0, 0).is_zero()
    assert RationalPolynomial.of(1, 2, 0).degree == 1


def test_st_boundary_values():
    assert st(2, 0) == 1
    for k in range(8):
        assert st(k, k) == 1
        assert st(k + 1, k) == 0
    with pytest.raises(IndexOutOfRange):
        st(3, 4)


def test_closed_form_values():
    assert st_closed_form(3, 2) == 9
    assert st_closed_form(4, 0) == 14
    assert st_closed_form(5, 0) == 77
    assert st_closed_form(2, 5) == 6
    with pytest.raises(UnsupportedOffset):
        st_closed_form(6, 1)


@pytest.mark.parametrize("r", [0, 1, 2, 3, 4, 5])
def test_closed_forms_match_recursion(r):
    for k in range(41):
        assert st_closed_form(r, k) == f1(k + r, k)


def test_lift_reproduces_known_coefficients():
    fams = lift_families(5)
    assert fams[3].polynomial.coefficients == (Fraction(3), Fraction(3))
    assert fams[4].polynomial.coefficients == (
        Fraction(14), Fraction(29, 2), Fraction(1, 2))
    assert fams[5].polynomial.coefficients == (
        Fraction(77), Fraction(80), Fraction(3))


@pytest.mark.parametrize("r", range(2, 8))
def test_lifted_polynomials_match_recursion(r):
    fam = lift_families(r)[r]
    assert fam.polynomial(0) == fam.k0_value == f1(r, 0)
    for k in range(1, 41):
        assert fam.polynomial(k) == f1(k + r, k)


def test_lift_requires_lower_offsets_in_order():
    from permdom.errors import MissingLowerOffset

    with pytest.raises(MissingLowerOffset):
        lift_polynomial(4, [])  # offset 2 family missing


def test_lift_rejects_small_offsets():
    with pytest.raises(UnsupportedOffset):
        lift_polynomial(1, [])


def test_sequence_table():
    triangle, column = sequence_table(5)
    assert [triangle.get(3, k) for k in range(4)] == [3, 2, 0, 1]
    assert [triangle.get(2, k) for k in range(3)] == [1, 0, 1]
    assert column.get(5) == 43
    assert column.get(0) == 0
    with pytest.raises(IndexOutOfRange):
        sequence_table(31)
