"""Exact fields: the rationals, prime fields F_p and quadratic extensions F_p^2.

Rationals are plain :class:`fractions.Fraction` values. Residues mod p are
:class:`Mod`, elements of F_p^2 are :class:`QuadMod` (a + b*w with w^2 = n,
n the smallest quadratic non-residue mod p).
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Mod:
    """Residue class modulo a prime ``p``, stored in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Mod(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return Mod(pow(self.v, -1, self.p), self.p) ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, (int, Fraction)):
            o = self._coerce(other)
            return (o - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class QuadMod:
    """Element ``a + b*w`` of F_p^2 where ``w^2 = field.n``."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: int, b: int, field: "QuadraticExtension"):
        p = field.p
        self.a = a % p
        self.b = b % p
        self.field = field

    def _coerce(self, other):
        if isinstance(other, QuadMod):
            return other.a, other.b
        if isinstance(other, Mod):
            return other.v, 0
        if isinstance(other, int):
            return other, 0
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadMod(self.a + o[0], self.b + o[1], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadMod(self.a - o[0], self.b - o[1], self.field)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c, d = o
        n = self.field.n
        return QuadMod(self.a * c + n * self.b * d, self.a * d + self.b * c, self.field)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.a * self.a - self.field.n * self.b * self.b) % self.field.p

    def inverse(self) -> "QuadMod":
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("division by zero in F_p^2")
        k = pow(nm, -1, self.field.p)
        return QuadMod(self.a * k, -self.b * k, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * QuadMod(o[0], o[1], self.field).inverse()

    def __neg__(self):
        return QuadMod(-self.a, -self.b, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return (self.a - o[0]) % p == 0 and (self.b - o[1]) % p == 0

    def __hash__(self):
        return hash((self.a, self.b, self.field.p))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"QuadMod({self.a}, {self.b}; p={self.field.p}, n={self.field.n})"


class Rationals:
    name = "Q"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Mod):
            raise TypeError("cannot lift a residue class to Q")
        return Fraction(x)

    def is_square(self, x) -> bool:
        return self.sqrt(x) is not None

    def sqrt(self, x) -> Fraction | None:
        """Exact rational square root (the non-negative one), or None."""
        x = Fraction(x)
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    def random(self, rng, height: int = 10) -> Fraction:
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


QQ = Rationals()


class PrimeField:
    """F_p. ``p = 2`` is admitted (brute-force enumeration only)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"Fp:{p}"
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def __call__(self, x) -> Mod:
        if isinstance(x, Mod):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in F_{self.p}")
            return Mod(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Mod(int(x), self.p)

    def elements(self):
        return [Mod(i, self.p) for i in range(self.p)]

    @property
    def order(self) -> int:
        return self.p

    def legendre(self, x) -> int:
        v = self(x).v
        if v == 0:
            return 0
        if self.p == 2:
            return 1
        return 1 if pow(v, (self.p - 1) // 2, self.p) == 1 else -1

    def is_square(self, x) -> bool:
        return self.legendre(x) >= 0

    @property
    def nonresidue(self) -> int:
        return smallest_nonresidue(self.p)

    def sqrt(self, x) -> Mod | None:
        """The smaller of the two square roots, or None for a non-residue."""
        v = self(x).v
        r = tonelli_shanks(v, self.p)
        if r is None:
            return None
        return Mod(min(r, self.p - r), self.p)

    def random(self, rng, height: int = 0) -> Mod:
        return Mod(rng.randrange(self.p), self.p)

    @property
    def ext2(self) -> "QuadraticExtension":
        return QuadraticExtension(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


class QuadraticExtension:
    """F_p^2 = F_p(w), w^2 = smallest non-residue. Odd p only."""

    def __init__(self, p: int):
        if p == 2:
            raise ValueError("F_4 is not modelled")
        self.p = p
        self.n = smallest_nonresidue(p)
        self.characteristic = p
        self.zero = QuadMod(0, 0, self)
        self.one = QuadMod(1, 0, self)
        self.omega = QuadMod(0, 1, self)

    def __call__(self, a, b=0) -> QuadMod:
        if isinstance(a, QuadMod):
            return a
        return QuadMod(int(a), int(b), self)

    def elements(self):
        return [QuadMod(a, b, self) for a in range(self.p) for b in range(self.p)]

    def sqrt(self, x) -> QuadMod | None:
        """Square root of an element of the prime subfield (always exists)."""
        x = self(x)
        if x.b != 0:
            raise NotImplementedError("square roots only for F_p elements")
        F = GF(self.p)
        r = F.sqrt(x.a)
        if r is not None:
            return QuadMod(r.v, 0, self)
        # x = n * (x/n) with x/n a residue, so sqrt(x) = w * sqrt(x/n)
        r = F.sqrt(Mod(x.a, self.p) / self.n)
        return QuadMod(0, r.v, self)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))

    def __repr__(self):
        return f"GF({self.p}^2)"


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    if p == 2:
        raise ValueError("no quadratic non-residue mod 2")
    for n in range(2, p):
        if pow(n, (p - 1) // 2, p) == p - 1:
            return n
    raise ValueError(f"{p} is not an odd prime")


def tonelli_shanks(a: int, p: int) -> int | None:
    """A square root of ``a`` mod ``p`` or None if ``a`` is a non-residue.

    Deterministic: the auxiliary non-residue is the smallest one.
    """
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def field_of(x):
    """Field an element lives in (ints and Fractions count as Q)."""
    if isinstance(x, Mod):
        return GF(x.p)
    if isinstance(x, QuadMod):
        return x.field
    if isinstance(x, (int, Fraction)):
        return QQ
    raise TypeError(f"not a field element: {x!r}")


def parse_field(text: str):
    """``"Q"`` or ``"Fp:<p>"``."""
    text = text.strip()
    if text in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"(?:Fp|F|GF)[:]?(\d+)", text)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {text!r}; expected Q or Fp:<p>")


def element_to_json(x):
    """Ints for integral values, ``"p/q"`` strings otherwise."""
    if isinstance(x, Mod):
        return x.v
    if isinstance(x, QuadMod):
        return [x.a, x.b]
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"
