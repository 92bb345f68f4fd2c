"""Sparse integer polynomials in the trace coordinates s, t, u."""

from __future__ import annotations

from fractions import Fraction

from .errors import NotDivisible, NotMonicInU
from .fields import Mod, field_of

VARS = ("s", "t", "u")


def _order_key(mono):
    # ascending total degree, lex (s > t > u) inside a degree, constant last
    deg = sum(mono)
    return (deg == 0, deg, tuple(-e for e in mono))


class TracePoly:
    """Immutable map ``(i, j, k) -> coefficient`` for ``s^i t^j u^k``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = int(c)
            if c:
                clean[tuple(int(e) for e in mono)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "TracePoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, i=0, j=0, k=0, c=1) -> "TracePoly":
        return cls({(i, j, k): c})

    @classmethod
    def _wrap(cls, other):
        if isinstance(other, TracePoly):
            return other
        if isinstance(other, int):
            return cls.const(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TracePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TracePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for (a, b, c), x in self.terms.items():
            for (d, e, f), y in other.terms.items():
                m = (a + d, b + e, c + f)
                out[m] = out.get(m, 0) + x * y
        return TracePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = TracePoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((m[var] for m in self.terms), default=-1)

    def u_coefficients(self) -> list:
        """Coefficients of u^0, u^1, ... as polynomials in s, t."""
        n = self.degree_in(2)
        parts: list = [dict() for _ in range(n + 1)]
        for (i, j, k), c in self.terms.items():
            parts[k][(i, j, 0)] = c
        return [TracePoly(p) for p in parts]

    def substitute(self, s=None, t=None, u=None) -> "TracePoly":
        """Swap or rename variables: each argument is a variable index."""
        perm = (0 if s is None else s, 1 if t is None else t, 2 if u is None else u)
        out = {}
        for m, c in self.terms.items():
            new = [0, 0, 0]
            for idx, e in enumerate(m):
                new[perm[idx]] += e
            out[tuple(new)] = out.get(tuple(new), 0) + c
        return TracePoly(out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _order_key(mc[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self.sorted_terms():
            factors = []
            for v, e in zip(VARS, mono):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + text)
        return " ".join(pieces)

    def __repr__(self):
        return f"TracePoly({str(self)!r})"

    def __call__(self, s, t, u):
        return poly_eval(self, (s, t, u))


S = TracePoly.monomial(1, 0, 0)
T = TracePoly.monomial(0, 1, 0)
U = TracePoly.monomial(0, 0, 1)
ONE = TracePoly.const(1)
#: s^2 + t^2 + u^2 - s*t*u - 4
MARKOFF_F = S**2 + T**2 + U**2 - S * T * U - 4


def poly_add(p: TracePoly, q: TracePoly) -> TracePoly:
    return p + q


def poly_mul(p: TracePoly, q: TracePoly) -> TracePoly:
    return p * q


def poly_divide_exact(n: TracePoly, divisor: TracePoly) -> TracePoly:
    """Exact quotient ``n / divisor`` for a divisor monic in ``u``.

    Long division in u with coefficients in Z[s, t]; raises
    :class:`NotDivisible` carrying the remainder when it is nonzero.
    """
    if divisor.is_zero():
        raise NotMonicInU("division by zero polynomial")
    m = divisor.degree_in(2)
    dcoeffs = divisor.u_coefficients()
    if m < 1 or dcoeffs[m] != ONE:
        raise NotMonicInU(f"{divisor} is not monic of positive degree in u")
    quotient = TracePoly()
    rem = n
    while rem.degree_in(2) >= m:
        k = rem.degree_in(2)
        lead = rem.u_coefficients()[k]
        step = lead * TracePoly.monomial(0, 0, k - m)
        quotient = quotient + step
        rem = rem - step * divisor
    if not rem.is_zero():
        raise NotDivisible(rem)
    return quotient


def poly_eval(p: TracePoly, point):
    """Evaluate at ``(s, t, u)``; all three coordinates from one field."""
    s, t, u = point
    field = field_of(s)
    if field_of(t) != field or field_of(u) != field:
        raise ValueError("coordinates from different fields")
    if isinstance(s, Mod):
        q = s.p
        return Mod(eval_mod(p, s.v, t.v, u.v, q), q)
    if field.characteristic == 0:
        s, t, u = Fraction(s), Fraction(t), Fraction(u)
    total = field.zero
    pw = [_powers(x, p.degree_in(i), field.one) for i, x in enumerate((s, t, u))]
    for (i, j, k), c in p.terms.items():
        total = total + c * pw[0][i] * pw[1][j] * pw[2][k]
    return total


def eval_mod(p: TracePoly, s: int, t: int, u: int, q: int) -> int:
    """Integer fast path: value of ``p`` at (s, t, u) reduced mod ``q``."""
    pw = [_powers_mod(x % q, p.degree_in(i), q) for i, x in enumerate((s, t, u))]
    total = 0
    for (i, j, k), c in p.terms.items():
        total += c * pw[0][i] * pw[1][j] * pw[2][k]
    return total % q


def _powers(x, n, one):
    out = [one]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def _powers_mod(x, n, q):
    out = [1 % q]
    for _ in range(n):
        out.append(out[-1] * x % q)
    return out


def coefficient_arrays(p: TracePoly, modulus: int | None = None):
    """``(exponents (T, 3), coefficients (T,))`` int64 arrays for the kernels."""
    import numpy as np

    items = p.sorted_terms()
    exps = np.array([m for m, _ in items], dtype=np.int64).reshape(-1, 3)
    coeffs = [c % modulus if modulus else c for _, c in items]
    return exps, np.array(coeffs, dtype=np.int64)
