"""Exact 2x2 matrices over Q, F_p and F_p^2."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InvariantError, NotInSL2, NotSimilar
from .fields import QQ, element_to_json, field_of
from .words import Word


@dataclass(frozen=True)
class Mat2:
    a: object
    b: object
    c: object
    d: object

    @classmethod
    def of(cls, field, a, b, c, d) -> "Mat2":
        return cls(field(a), field(b), field(c), field(d))

    @classmethod
    def identity(cls, field) -> "Mat2":
        return cls(field.one, field.zero, field.zero, field.one)

    @property
    def field(self):
        return field_of(self.a)

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def trace(self):
        return self.a + self.d

    def __mul__(self, o: "Mat2") -> "Mat2":
        if not isinstance(o, Mat2):
            return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __rmul__(self, k):
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __add__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        det = self.det()
        if det == 0:
            raise ZeroDivisionError("singular matrix")
        if det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        k = self.field.one / det
        return Mat2(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def __eq__(self, o):
        if not isinstance(o, Mat2):
            return NotImplemented
        return all(x == y for x, y in zip(self.entries(), o.entries()))

    def __hash__(self):
        return hash(self.entries())

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def to_json(self):
        return [[element_to_json(self.a), element_to_json(self.b)],
                [element_to_json(self.c), element_to_json(self.d)]]

    def __str__(self):
        rows = self.to_json()
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in rows) + "]"


def sl2(field, a, b, c, d) -> Mat2:
    """Construct a matrix asserted to lie in SL(2); checks ad - bc = 1."""
    m = Mat2.of(field, a, b, c, d)
    if m.det() != 1:
        raise NotInSL2(f"det {m} = {m.det()} != 1")
    return m


_ENTRY = r"\s*(-?\d+(?:\s*/\s*\d+)?)\s*"
_MATRIX_RE = re.compile(
    rf"\s*\[\s*\[{_ENTRY},{_ENTRY}\]\s*,\s*\[{_ENTRY},{_ENTRY}\]\s*\]\s*"
)


def parse_matrix(text: str, field=QQ) -> Mat2:
    """Parse ``[[a,b],[c,d]]`` with integer or ``p/q`` entries."""
    m = _MATRIX_RE.fullmatch(text)
    if not m:
        raise ValueError(f"bad matrix literal {text!r}; expected [[a,b],[c,d]]")
    vals = [Fraction(g.replace(" ", "")) for g in m.groups()]
    return Mat2.of(field, *vals)


def evaluate_word(w: Word, A: Mat2, B: Mat2) -> Mat2:
    """The product w(A, B), letters read left to right."""
    field = A.field
    if B.field != field:
        raise ValueError("A and B over different fields")
    Ai, Bi = A.inverse(), B.inverse()
    table = {("x", 1): A, ("x", -1): Ai, ("y", 1): B, ("y", -1): Bi}
    M = Mat2.identity(field)
    for letter in w.letters:
        M = M * table[letter]
    return M


def trace_triple(A: Mat2, B: Mat2):
    """(tr A, tr B, tr AB)."""
    return (A.trace(), B.trace(), (A * B).trace())


def companion(t, field=None) -> Mat2:
    """g_t = [[0, -1], [1, t]]: det 1, trace t."""
    field = field or field_of(t)
    return Mat2.of(field, 0, -1, 1, t)


class ElementClass(str, Enum):
    CENTRAL = "Central"
    SEMISIMPLE = "SemisimpleNoncentral"
    UNIPOTENT = "UnipotentNoncentral"
    NEGATIVE_UNIPOTENT = "NegativeUnipotentNoncentral"


def classify_element(M: Mat2) -> ElementClass:
    if M.is_scalar():
        return ElementClass.CENTRAL
    tr = M.trace()
    if tr == 2:
        return ElementClass.UNIPOTENT
    if tr == -2:
        return ElementClass.NEGATIVE_UNIPOTENT
    return ElementClass.SEMISIMPLE


def nullspace(rows, field) -> list:
    """Basis of the right kernel of a matrix given as a list of rows."""
    rows = [[field(x) for x in r] for r in rows]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                k = rows[i][col]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [field.zero] * ncols
        v[free] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(v)
    return basis


def conjugating_matrix(beta: Mat2, alpha: Mat2) -> Mat2:
    """Invertible g with g * beta = alpha * g (so g beta g^-1 = alpha).

    The solution space of the linear system g*beta - alpha*g = 0 has
    dimension >= 2 for similar noncentral matrices; an invertible member of
    the pencil lambda*g1 + g2 is found by trying g1 and a few lambdas.
    """
    field = beta.field
    cb, ca = classify_element(beta), classify_element(alpha)
    if cb != ca or beta.trace() != alpha.trace() or beta.det() != alpha.det():
        raise NotSimilar(f"{beta} ({cb.value}) is not similar to {alpha} ({ca.value})")
    if cb is ElementClass.CENTRAL:
        if beta == alpha:
            return Mat2.identity(field)
        raise NotSimilar("distinct central elements")
    b, a = beta, alpha
    # unknown g = (g00, g01, g10, g11); entry (i, j) of g*b - a*g
    rows = [
        [b.a - a.a, b.c, -a.b, 0],
        [b.b, b.d - a.a, 0, -a.b],
        [-a.c, 0, b.a - a.d, b.c],
        [0, -a.c, b.b, b.d - a.d],
    ]
    basis = nullspace(rows, field)
    if not basis:
        raise NotSimilar("commuting system has only the zero solution")
    mats = [Mat2(*v) for v in basis]
    candidates = [mats[0]]
    if len(mats) > 1:
        # a nonzero binary quadratic has at most two projective zeros
        n = getattr(field, "order", 4)
        candidates += [mats[0] * field(lam) + mats[1] for lam in range(min(n, 4))]
    for g in candidates:
        if g.det() != 0:
            if g * beta != alpha * g:
                raise InvariantError("conjugator fails g*beta = alpha*g")
            return g
    raise NotSimilar("no invertible element in the solution pencil")


def eigenlines(M: Mat2) -> set | None:
    """Eigenvector lines of ``M`` over F_p^2 as normalized pairs.

    Returns None for scalar matrices (every line is an eigenline).
    """
    F = M.field
    if not hasattr(F, "ext2"):
        raise NotImplementedError("eigenlines are decided over F_p^2 only")
    if M.is_scalar():
        return None
    E = F.ext2
    s = E(M.trace().v)
    disc = s * s - 4
    root = E.sqrt(disc)
    half = E(2).inverse()
    lines = set()
    for lam in ((s + root) * half, (s - root) * half):
        n00, n01 = E(M.a.v) - lam, E(M.b.v)
        n10, n11 = E(M.c.v), E(M.d.v) - lam
        if n00 or n01:
            v = (-n01, n00)
        else:
            v = (-n11, n10)
        lines.add(_normalize(v))
    return lines


def _normalize(v):
    x, y = v
    if x:
        return (1, _key(y / x))
    return (0, 1)


def _key(z):
    return (z.a, z.b)


def common_eigenvector(A: Mat2, B: Mat2) -> bool:
    """Whether A and B share an eigenvector over the algebraic closure (F_p only)."""
    la, lb = eigenlines(A), eigenlines(B)
    if la is None or lb is None:
        return True
    return bool(la & lb)


def random_sl2(field, rng, height: int = 6) -> Mat2:
    """Random element of SL(2): a random (a, b, c) with a != 0, d solved."""
    while True:
        a, b, c = (field.random(rng, height) for _ in range(3))
        if a != 0:
            d = (field.one + b * c) / a
            return Mat2(a, b, c, d)
