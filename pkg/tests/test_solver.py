from fractions import Fraction

import pytest

from sl2words.errors import CentralInput, EmptyVariety, TrivialWordError, Unsupported
from sl2words.fields import GF, QQ, _is_prime
from sl2words.matrices import Mat2, companion, evaluate_word, parse_matrix, sl2, trace_triple
from sl2words.oracle import brute_force_count
from sl2words.polynomial import poly_eval
from sl2words.solver import (solve_commutator_negative, solve_commutator_unipotent,
                             solve_minus_identity, solve_word_equation)
from sl2words.trace import trace_polynomial
from sl2words.words import COMMUTATOR, parse_word

ODD_PRIMES = [p for p in range(3, 50) if _is_prime(p)]


def _check(sol, w, alpha):
    assert sol.verified
    assert evaluate_word(w, sol.A, sol.B) == alpha
    assert sol.A.det() == 1 and sol.B.det() == 1
    assert poly_eval(trace_polynomial(w), sol.triple) == alpha.trace()


@pytest.mark.parametrize("a", [3, 4, 5, Fraction(7, 2), -1, 0])
def test_commutator_over_q(a):
    alpha = companion(QQ(a))
    _check(solve_word_equation(COMMUTATOR, alpha), COMMUTATOR, alpha)


def test_witness_triple_matches_pair():
    sol = solve_word_equation(COMMUTATOR, companion(QQ(3)))
    assert list(sol.to_dict()["witness"]["point"]) == [x for x in sol.to_dict()["triple"]]
    assert trace_triple(sol.A, sol.B) == sol.triple


def test_commutator_over_f5_cross_checked():
    F = GF(5)
    alpha = companion(F(3))
    _check(solve_word_equation(COMMUTATOR, alpha), COMMUTATOR, alpha)
    assert brute_force_count(COMMUTATOR, alpha, 5).count > 0


@pytest.mark.parametrize("word", ["[y,x]", "[x^2,y]", "[x,y^2]"])
def test_other_words_over_q(word):
    w = parse_word(word)
    alpha = sl2(QQ, 2, 3, 1, 2)  # trace 4
    _check(solve_word_equation(w, alpha), w, alpha)


def test_unipotent_family():
    sol = solve_commutator_unipotent(sl2(QQ, 1, 1, 0, 1))
    assert sol.A == sl2(QQ, 1, Fraction(-1, 3), 0, 1)
    assert sol.B == sl2(QQ, 2, 0, 0, Fraction(1, 2))
    alpha = parse_matrix("[[3,-4],[1,-1]]")
    _check(solve_commutator_unipotent(alpha), COMMUTATOR, alpha)
    with pytest.raises(CentralInput):
        solve_commutator_unipotent(Mat2.identity(QQ))


def test_negative_unipotent():
    alpha = -sl2(QQ, 1, 1, 0, 1)
    sol = solve_commutator_negative(alpha)
    _check(sol, COMMUTATOR, alpha)
    assert sol.witness["point"] == [3, 3, 6]
    with pytest.raises(CentralInput):
        solve_commutator_negative(-Mat2.identity(QQ))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_trace_pm2_over_fp(p):
    F = GF(p)
    for alpha in (Mat2.of(F, 1, 1, 0, 1), Mat2.of(F, 1, 0, 3, 1), Mat2.of(F, -1, 1, 0, -1)):
        _check(solve_word_equation(COMMUTATOR, alpha), COMMUTATOR, alpha)


def test_trace_pm2_over_f3_is_empty():
    # the commutator subgroup of SL(2, 3) is Q8: no order-3 or order-6 commutators
    F = GF(3)
    for alpha in (Mat2.of(F, 1, 1, 0, 1), Mat2.of(F, -1, 1, 0, -1)):
        assert brute_force_count(COMMUTATOR, alpha, 3).count == 0
        with pytest.raises(EmptyVariety) as info:
            solve_word_equation(COMMUTATOR, alpha)
        assert info.value.certificate["pairs_checked"] == 576


def test_minus_identity_over_q():
    with pytest.raises(EmptyVariety) as info:
        solve_minus_identity(QQ)
    assert info.value.certificate == {"class": [-1, -1], "invariants": {"inf": -1, "2": -1}}


def test_minus_identity_small_fields():
    sol = solve_minus_identity(GF(3))
    assert sol.A == Mat2.of(GF(3), 1, 1, 1, -1)
    sol = solve_minus_identity(GF(5))
    assert sol.A == Mat2.of(GF(5), 0, 2, 2, 0)


@pytest.mark.parametrize("p", ODD_PRIMES)
def test_minus_identity_every_small_prime(p):
    F = GF(p)
    sol = solve_word_equation(COMMUTATOR, -Mat2.identity(F))
    _check(sol, COMMUTATOR, -Mat2.identity(F))
    assert sol.triple == (0, 0, 0)


def test_dispatch_edges():
    I = Mat2.identity(QQ)
    with pytest.raises(TrivialWordError):
        solve_word_equation(parse_word("xX"), I)
    sol = solve_word_equation(parse_word("[x^2,y]"), I)
    assert (sol.A, sol.B) == (I, I)
    with pytest.raises(Unsupported):
        solve_word_equation(parse_word("x^2y"), companion(QQ(3)))
    with pytest.raises(Unsupported):
        solve_word_equation(parse_word("[x^2,y]"), sl2(QQ, 1, 1, 0, 1))
    alpha = companion(QQ(3))
    assert solve_word_equation(parse_word("x"), alpha).A == alpha


def test_empty_trace_surface_over_fp():
    # [x,y]^2 = g_5 needs tr [x,y]^2 = 7, not a square mod 11
    with pytest.raises(EmptyVariety):
        solve_word_equation(parse_word("[x,y]^2"), companion(GF(11)(5)))
    w = parse_word("[x,y]^2")
    assert brute_force_count(w, companion(GF(11)(5)), 11).count == 0


def test_deterministic():
    a = solve_word_equation(COMMUTATOR, companion(QQ(4))).to_dict()
    b = solve_word_equation(COMMUTATOR, companion(QQ(4))).to_dict()
    assert a == b
