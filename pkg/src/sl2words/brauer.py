"""Hilbert symbols over Q and the quaternion classes attached to Markoff surfaces.

Places are ``"inf"`` for the real place and prime integers otherwise. A
:class:`LocalInvariant` lists the symbol at every place that can be
nontrivial (infinity, 2 and the odd primes dividing the representatives).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import FactorizationTimeout, InvariantError, SingularSurface
from .fields import QQ

INF = "inf"
DEFAULT_RHO_STEPS = 200_000


@lru_cache(maxsize=4096)
def factorize(n: int, max_steps: int = DEFAULT_RHO_STEPS) -> dict:
    """Prime factorization of |n| >= 1: trial division, then Pollard rho."""
    from sympy import isprime
    from sympy.ntheory import pollard_rho

    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict = {}
    for q in (2, 3, 5):
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
    q, step = 7, 4
    while q * q <= n and q < 10_000:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if isprime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = pollard_rho(m, max_steps=max_steps)
        if d is None:
            d = pollard_rho(m, a=3, max_steps=max_steps)
        if d is None:
            raise FactorizationTimeout(f"could not split {m} within {max_steps} rho steps")
        stack += [d, m // d]
    return dict(sorted(out.items()))


def square_class(x) -> int:
    """Squarefree integer representative of x modulo squares (sign kept)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no square class")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    rep = 1
    for q, e in factorize(abs(n)).items():
        if e % 2:
            rep *= q
    return sign * rep


def _valuation(n: int, q: int):
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v, n


def _legendre(a: int, q: int) -> int:
    return 1 if pow(a % q, (q - 1) // 2, q) == 1 else -1


def hilbert_symbol(a, b, place) -> int:
    """(a, b)_v for nonzero rationals a, b and a place v of Q."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == INF:
        return -1 if a < 0 and b < 0 else 1
    # same square class, integral
    a = a.numerator * a.denominator
    b = b.numerator * b.denominator
    q = int(place)
    alpha, u = _valuation(a, q)
    beta, v = _valuation(b, q)
    if q == 2:
        eps = lambda z: ((z - 1) // 2) % 2
        omega = lambda z: ((z * z - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((q - 1) // 2)) % 2 else 1
    return sign * _legendre(u, q) ** beta * _legendre(v, q) ** alpha


def places_for(a, b) -> list:
    """[inf, 2, odd primes dividing the square-class representatives of a and b]."""
    ra, rb = square_class(a), square_class(b)
    odd = set(factorize(ra)) | set(factorize(rb))
    odd.discard(2)
    return [INF, 2] + sorted(odd)


@dataclass(frozen=True)
class QuaternionClass:
    a: int
    b: int

    @classmethod
    def of(cls, a, b) -> "QuaternionClass":
        return cls(square_class(a), square_class(b))

    def __str__(self):
        return f"({self.a}, {self.b})"


@dataclass(frozen=True)
class LocalInvariant:
    symbols: dict  # place -> +1 / -1

    @property
    def ramified(self) -> list:
        return [v for v, e in self.symbols.items() if e == -1]

    @property
    def product(self) -> int:
        out = 1
        for e in self.symbols.values():
            out *= e
        return out

    def to_json(self):
        return {str(v): e for v, e in self.symbols.items()}


def quaternion_invariants(cls: QuaternionClass) -> LocalInvariant:
    symbols = {v: hilbert_symbol(cls.a, cls.b, v) for v in places_for(cls.a, cls.b)}
    inv = LocalInvariant(symbols)
    if inv.product != 1:
        raise InvariantError(f"Hilbert reciprocity fails for {cls}: {symbols}")
    return inv


class BrauerQuotient(str, Enum):
    TRIVIAL = "Trivial"
    Z2 = "Z2"
    Z2xZ2 = "Z2xZ2"


@dataclass(frozen=True)
class MarkoffBrauer:
    d: Fraction
    cls: str
    quotient: BrauerQuotient
    rational: bool

    def to_json(self):
        from .fields import element_to_json

        return {"d": element_to_json(self.d), "class": self.cls,
                "brauer_quotient": self.quotient.value, "rational": self.rational}


def markoff_brauer(d) -> MarkoffBrauer:
    """Class (t^2 - 4, d) of the commutator conic bundle over M_d, and Br(M'_d)/Br(Q).

    Trivial when d or d(d+4) is a square (then M_d and the word variety are
    rational); Z2xZ2 when d+4 is a square but d is not; Z2 otherwise, i.e.
    when Q(sqrt d, sqrt(d+4)) has degree 4.
    """
    d = Fraction(d)
    if d == 0 or d == -4:
        raise SingularSurface(f"M_d is singular for d = {d}")
    from .fields import element_to_json

    label = f"(t^2-4, {element_to_json(d)})"
    if QQ.is_square(d) or QQ.is_square(d * (d + 4)):
        return MarkoffBrauer(d, label, BrauerQuotient.TRIVIAL, True)
    if QQ.is_square(d + 4):
        return MarkoffBrauer(d, label, BrauerQuotient.Z2xZ2, False)
    return MarkoffBrauer(d, label, BrauerQuotient.Z2, False)


def evaluate_class_at_point(d, pt) -> LocalInvariant:
    """Local invariants of the class (t^2 - 4, d) at a rational point of M_d.

    On M_d, (s^2 - 4)(t^2 - 4) = (2u - st)^2 - 4d is a norm from Q(sqrt d),
    so (s^2 - 4, d) represents the same class and is used when t^2 = 4. If
    s^2 = t^2 = 4 then d = ((2u - st)/2)^2 and the class is trivial.
    """
    d = Fraction(d)
    if d == 0 or d == -4:
        raise SingularSurface(f"M_d is singular for d = {d}")
    s, t, u = (Fraction(x) for x in (pt.triple if hasattr(pt, "triple") else pt))
    if s * s + t * t + u * u - s * t * u - 4 != d:
        raise ValueError(f"({s}, {t}, {u}) is not on M_{d}")
    if t * t != 4:
        first = t * t - 4
    elif s * s != 4:
        first = s * s - 4
    else:
        first = Fraction(1)
    return quaternion_invariants(QuaternionClass.of(first, d))
