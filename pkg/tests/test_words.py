import random

import pytest
from hypothesis import given, strategies as st

from sl2words.errors import WordSyntaxError
from sl2words.words import COMMUTATOR, X, Y, Word, parse_word, reduce_letters, word_class

letters = st.lists(st.tuples(st.sampled_from("xy"), st.sampled_from((1, -1))), max_size=20)
words = letters.map(Word)


def test_commutator_sugar():
    assert parse_word("[x,y]").letters == (("x", 1), ("y", 1), ("x", -1), ("y", -1))


def test_cancellation_gives_identity():
    w = parse_word("xX")
    assert w.trivial and word_class(w).trivial
    assert str(w) == "1" and parse_word("1") == w


def test_exponents():
    assert parse_word("x^2Y").letters == (("x", 1), ("x", 1), ("y", -1))
    assert parse_word("x^-1") == parse_word("X")
    assert parse_word("(xy)^-2") == parse_word("YXYX")
    assert parse_word("[x, y]^0").trivial


def test_word_class():
    assert word_class(COMMUTATOR)[:3] == (0, 0, True)
    assert word_class(parse_word("x^2y"))[:3] == (2, 1, False)
    assert word_class(parse_word("[x^2,y][y,x]")).in_commutator_subgroup


@pytest.mark.parametrize("text,pos", [("", 0), ("xz", 1), ("[x,y", 4), ("x^", 2), ("(x", 2)])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.position == pos


def test_nested_commutators():
    assert parse_word("[[x,y],x]") == COMMUTATOR * X * COMMUTATOR.inverse() * X.inverse()


@given(words)
def test_print_parse_round_trip(w):
    assert parse_word(str(w)) == w


@given(letters)
def test_reduction_idempotent(ls):
    once = reduce_letters(ls)
    assert reduce_letters(once) == once
    assert all(not (a[0] == b[0] and a[1] == -b[1]) for a, b in zip(once, once[1:]))


@given(words, words, words)
def test_group_law(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a * a.inverse()).trivial
    assert (a * Word()) == a


@given(words)
def test_exponent_sums(w):
    assert w.e_x == sum(e for g, e in w.letters if g == "x")
    assert w.swap().e_x == w.e_y


def test_random_word_restrictions():
    from sl2words.words import random_word

    rng = random.Random(5)
    for _ in range(50):
        assert word_class(random_word(rng, 12, True)).in_commutator_subgroup
        assert not word_class(random_word(rng, 12, False)).in_commutator_subgroup
        assert 1 <= len(random_word(rng, 7)) <= 7
    assert X != Y
