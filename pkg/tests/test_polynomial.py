from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2words.errors import NotDivisible, NotMonicInU
from sl2words.fields import GF, QQ
from sl2words.polynomial import (MARKOFF_F, ONE, S, T, U, TracePoly, poly_divide_exact,
                                 poly_eval, poly_mul)

monos = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, st.integers(-9, 9), max_size=6).map(TracePoly)
rats = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_products():
    assert poly_mul(MARKOFF_F, ONE) == MARKOFF_F
    assert poly_mul(S, T) == TracePoly.monomial(1, 1, 0)
    assert poly_mul(U - 2, U + 2) == U**2 - 4


def test_division_examples():
    assert poly_divide_exact(MARKOFF_F * (S + T), MARKOFF_F) == S + T
    assert poly_divide_exact(MARKOFF_F, MARKOFF_F) == ONE
    with pytest.raises(NotDivisible) as info:
        poly_divide_exact(S, MARKOFF_F)
    assert info.value.remainder == S
    with pytest.raises(NotMonicInU):
        poly_divide_exact(S, 2 * U)


def test_markoff_values():
    q = QQ
    assert poly_eval(MARKOFF_F, (q(2), q(2), q(2))) == 0
    assert poly_eval(MARKOFF_F, (q(0), q(0), q(0))) == -4
    assert poly_eval(MARKOFF_F, (q(3), q(3), q(3))) == -4
    F7 = GF(7)
    assert poly_eval(MARKOFF_F, (F7(3), F7(3), F7(3))) == F7(-4)


def test_printing():
    assert str(MARKOFF_F + 2) == "s^2 + t^2 + u^2 - s*t*u - 2"
    assert str(-2 * S**2) == "-2*s^2"
    assert str(TracePoly()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a
    assert a - a == TracePoly()


@given(polys, polys, rats, rats, rats)
def test_evaluation_is_a_homomorphism(a, b, s, t, u):
    pt = (Fraction(s), Fraction(t), Fraction(u))
    assert poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt)
    assert poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt)


@given(polys, st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))
def test_mod_fast_path_matches_generic(a, s, t, u):
    F = GF(11)
    slow = sum((c * F(s) ** i * F(t) ** j * F(u) ** k for (i, j, k), c in a.terms.items()), F.zero)
    assert poly_eval(a, (F(s), F(t), F(u))) == slow


@given(polys)
def test_divide_round_trip(q):
    assert poly_divide_exact(q * MARKOFF_F, MARKOFF_F) == q


def test_big_coefficients_stay_exact():
    p = (S + T + U + 1000) ** 8
    assert max(abs(c) for c in p.terms.values()) > 2**63
    assert poly_divide_exact(p * MARKOFF_F, MARKOFF_F) == p
