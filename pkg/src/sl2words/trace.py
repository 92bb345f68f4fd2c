"""Trace polynomials of words, computed in the basis {I, A, B, AB}.

Every element of the group algebra generated by A, B in SL(2) is a
combination ``c0*I + c1*A + c2*B + c3*AB`` with coefficients in Z[s, t, u]
(s = tr A, t = tr B, u = tr AB). Right multiplication by a letter is a
linear map on the four coefficients, obtained from Cayley-Hamilton:

    A*A   = s*A - I            B*B   = t*B - I
    B*A   = (u - s*t)*I + t*A + s*B - AB
    AB*A  = -t*I + u*A + B     AB*B  = -A + t*AB

and A^-1 = s*I - A, B^-1 = t*I - B.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalDivisionFailure, NotDivisible, NotInCommutatorSubgroup, TrivialWordError
from .polynomial import MARKOFF_F, S, T, U, TracePoly, poly_divide_exact
from .words import Word

ZERO = TracePoly()
ONE = TracePoly.const(1)


@dataclass(frozen=True)
class AlgebraElement:
    c0: TracePoly
    c1: TracePoly
    c2: TracePoly
    c3: TracePoly

    def __add__(self, other):
        return AlgebraElement(self.c0 + other.c0, self.c1 + other.c1,
                              self.c2 + other.c2, self.c3 + other.c3)

    def __sub__(self, other):
        return AlgebraElement(self.c0 - other.c0, self.c1 - other.c1,
                              self.c2 - other.c2, self.c3 - other.c3)

    def scale(self, k: TracePoly) -> "AlgebraElement":
        return AlgebraElement(self.c0 * k, self.c1 * k, self.c2 * k, self.c3 * k)

    def trace(self) -> TracePoly:
        return 2 * self.c0 + S * self.c1 + T * self.c2 + U * self.c3

    def as_tuple(self):
        return (self.c0, self.c1, self.c2, self.c3)


IDENTITY = AlgebraElement(ONE, ZERO, ZERO, ZERO)


def _times_A(e: AlgebraElement) -> AlgebraElement:
    c0, c1, c2, c3 = e.as_tuple()
    # I*A = A; A*A = sA - I; B*A = (u-st)I + tA + sB - AB; AB*A = -tI + uA + B
    return AlgebraElement(
        -c1 + (U - S * T) * c2 - T * c3,
        c0 + S * c1 + T * c2 + U * c3,
        S * c2 + c3,
        -c2,
    )


def _times_B(e: AlgebraElement) -> AlgebraElement:
    c0, c1, c2, c3 = e.as_tuple()
    # I*B = B; A*B = AB; B*B = tB - I; AB*B = -A + tAB
    return AlgebraElement(-c2, -c3, c0 + T * c2, c1 + T * c3)


def right_mul_letter(e: AlgebraElement, letter: str) -> AlgebraElement:
    """Multiply on the right by ``"A"``, ``"a"`` (A^-1), ``"B"`` or ``"b"`` (B^-1)."""
    if letter == "A":
        return _times_A(e)
    if letter == "B":
        return _times_B(e)
    if letter == "a":
        return e.scale(S) - _times_A(e)
    if letter == "b":
        return e.scale(T) - _times_B(e)
    raise ValueError(f"unknown letter {letter!r}")


def _letter_code(g: str, sign: int) -> str:
    code = "A" if g == "x" else "B"
    return code if sign == 1 else code.lower()


def word_element(w: Word) -> AlgebraElement:
    e = IDENTITY
    for g, sign in w.letters:
        e = right_mul_letter(e, _letter_code(g, sign))
    return e


@lru_cache(maxsize=512)
def trace_polynomial(w: Word) -> TracePoly:
    """P_w with tr(w(A, B)) = P_w(tr A, tr B, tr AB) for all A, B in SL(2)."""
    return word_element(w).trace()


def commutator_factor(w: Word) -> TracePoly:
    """Q_w with P_w - 2 = Q_w * F, for nontrivial w in [F2, F2]."""
    if w.trivial:
        raise TrivialWordError("the identity word has no commutator factor")
    if w.e_x or w.e_y:
        raise NotInCommutatorSubgroup(f"{w} has exponent sums ({w.e_x}, {w.e_y})")
    try:
        return poly_divide_exact(trace_polynomial(w) - 2, MARKOFF_F)
    except NotDivisible as exc:
        raise InternalDivisionFailure(
            f"P_w - 2 not divisible by F for w = {w}; remainder {exc.remainder}"
        ) from exc
