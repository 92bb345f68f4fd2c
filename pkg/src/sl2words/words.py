"""Words in the free group on ``x`` and ``y``.

Grammar::

    word   := term+
    term   := letter exp? | "[" word "," word "]" exp? | "(" word ")" exp?
    letter := "x" | "y" | "X" | "Y"
    exp    := "^" "-"? digit+

Uppercase letters are inverses. ``[u,v]`` expands to ``u v u^-1 v^-1``.
The identity prints as ``1`` and ``"1"`` parses back to it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import WordSyntaxError


def reduce_letters(letters) -> tuple:
    out: list = []
    for g, e in letters:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    letters: tuple = ()
    e_x: int = field(init=False, compare=False)
    e_y: int = field(init=False, compare=False)

    def __post_init__(self):
        letters = reduce_letters(tuple((g, int(e)) for g, e in self.letters))
        for g, e in letters:
            if g not in ("x", "y") or e not in (1, -1):
                raise ValueError(f"bad letter {(g, e)!r}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "e_x", sum(e for g, e in letters if g == "x"))
        object.__setattr__(self, "e_y", sum(e for g, e in letters if g == "y"))

    @property
    def trivial(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        return Word(base.letters * abs(n))

    def swap(self) -> "Word":
        """Exchange the generators x and y."""
        return Word(tuple(("y" if g == "x" else "x", e) for g, e in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(g if e == 1 else g.upper() for g, e in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"


def commutator(u: Word, v: Word) -> Word:
    return Word(u.letters + v.letters + u.inverse().letters + v.inverse().letters)


X = Word((("x", 1),))
Y = Word((("y", 1),))
COMMUTATOR = commutator(X, Y)


class WordClass(NamedTuple):
    e_x: int
    e_y: int
    in_commutator_subgroup: bool
    trivial: bool


def word_class(w: Word) -> WordClass:
    return WordClass(w.e_x, w.e_y, w.e_x == 0 and w.e_y == 0, w.trivial)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise WordSyntaxError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self) -> tuple:
        letters: tuple = ()
        while self.peek() in ("x", "y", "X", "Y", "[", "("):
            letters += self.term()
        return letters

    def term(self) -> tuple:
        ch = self.peek()
        if ch in ("x", "y", "X", "Y"):
            self.pos += 1
            base = ((ch.lower(), 1 if ch.islower() else -1),)
        elif ch == "[":
            self.pos += 1
            u = self.nonempty_word()
            self.expect(",")
            v = self.nonempty_word()
            self.expect("]")
            base = commutator(Word(u), Word(v)).letters
        elif ch == "(":
            self.pos += 1
            base = self.nonempty_word()
            self.expect(")")
        else:
            self.error("expected a letter, '[' or '('")
        if self.peek() == "^":
            self.pos += 1
            n = self.exponent()
            return (Word(base) ** n).letters
        return base

    def nonempty_word(self) -> tuple:
        if self.peek() not in ("x", "y", "X", "Y", "[", "("):
            self.error("expected a word")
        return self.word()

    def exponent(self) -> int:
        self.skip_ws()
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            sign = -1
            self.pos += 1
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits after '^'")
        return sign * int(self.text[start:self.pos])


def parse_word(text: str) -> Word:
    """Parse ``text``; the result is freely reduced (possibly trivial)."""
    if text.strip() == "1":
        return Word()
    parser = _Parser(text)
    letters = parser.nonempty_word()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error(f"unexpected {text[parser.pos]!r}")
    return Word(letters)


def random_word(rng, length: int, commutator_subgroup: bool | None = None) -> Word:
    """Random nontrivial reduced word of at most ``length`` letters.

    ``commutator_subgroup`` True/False restricts to zero/nonzero exponent
    sums (rejection sampling; ``length`` >= 4 for True).
    """
    while True:
        n = rng.randint(1, length)
        w = Word(tuple((rng.choice("xy"), rng.choice((1, -1))) for _ in range(n)))
        if w.trivial:
            continue
        in_comm = w.e_x == 0 and w.e_y == 0
        if commutator_subgroup is None or commutator_subgroup == in_comm:
            return w
