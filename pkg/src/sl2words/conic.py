"""The fibre conic over a point (s, t, u) and its pairs (M, g_t).

Over (s, t, u) the pairs (M, g_t) with tr M = s, tr(M g_t) = u are

    M = [[-x + s, y], [t*x + y - u, x]],   det M = 1,

i.e. the affine conic -x^2 - y^2 - t*x*y + s*x + u*y = 1. With
c = t^2 - 4 and f = F(s, t, u) the substitution

    mu = (c/2) y + ((2u - s t)/2) z,   nu = x + (t/2) y - (s/2) z,   xi = z

turns the homogenized form q into (mu^2 - c nu^2 - f xi^2) / c, so at
z = 1 the fibre is mu^2 - c nu^2 = f whenever c != 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .brauer import hilbert_symbol, places_for
from .errors import InvariantError, Insolvable, OnCayleyCubic, SearchExhausted, TransformSingular
from .fields import QQ, element_to_json, field_of
from .matrices import Mat2, companion
from .polynomial import MARKOFF_F, poly_eval
from .surfaces import DEFAULT_BOUND, rational_layers


@dataclass(frozen=True)
class ConicFiber:
    s: object
    t: object
    u: object
    field: object
    c: object
    f: object
    special: bool

    @property
    def triple(self):
        return (self.s, self.t, self.u)

    def affine_value(self, x, y):
        """-x^2 - y^2 - t x y + s x + u y - 1 (zero on the fibre)."""
        s, t, u = self.triple
        return -x * x - y * y - t * x * y + s * x + u * y - 1

    def diagonal_value(self, mu, nu):
        """mu^2 - c nu^2 - f (zero on the fibre)."""
        return mu * mu - self.c * nu * nu - self.f

    def forward(self, x, y):
        """(x, y) -> (mu, nu) at z = 1."""
        s, t, u = self.triple
        two = self.field(2)
        mu = self.c / two * y + (2 * u - s * t) / two
        nu = x + t / two * y - s / two
        return mu, nu

    def inverse(self, mu, nu):
        """(mu, nu) -> (x, y) at xi = 1; needs c != 0."""
        if self.special:
            raise TransformSingular("t^2 = 4: the diagonal coordinates degenerate")
        s, t, u = self.triple
        two = self.field(2)
        y = (2 * mu - (2 * u - s * t)) / self.c
        x = nu - t / two * y + s / two
        return x, y


def fiber_at(pt) -> ConicFiber:
    s, t, u = pt.triple if hasattr(pt, "triple") else pt
    field = field_of(s)
    s, t, u = field(s), field(t), field(u)
    f = poly_eval(MARKOFF_F, (s, t, u))
    if f == 0:
        raise OnCayleyCubic(f"({s}, {t}, {u}) lies on the Cayley cubic F = 0")
    c = t * t - 4
    return ConicFiber(s, t, u, field, c, f, c == 0)


class Solvability(NamedTuple):
    solvable: bool
    failing: tuple  # places where the Hilbert symbol (c, f) is -1


def conic_solvable_q(fiber: ConicFiber) -> Solvability:
    """Whether mu^2 - c nu^2 = f has a rational point: (c, f)_v = 1 for all v."""
    if fiber.field != QQ:
        raise ValueError("conic_solvable_q works over Q")
    if fiber.special:
        return Solvability(True, ())
    c, f = Fraction(fiber.c), Fraction(fiber.f)
    failing = tuple(v for v in places_for(c, f) if hilbert_symbol(c, f, v) == -1)
    return Solvability(not failing, failing)


@dataclass(frozen=True)
class ConicPoint:
    kind: str  # "diagonal" -> (mu, nu); "affine" -> (x, y)
    first: object
    second: object

    def to_json(self):
        names = ("mu", "nu") if self.kind == "diagonal" else ("x", "y")
        return {"kind": self.kind, names[0]: element_to_json(self.first),
                names[1]: element_to_json(self.second)}


def _special_point(fiber: ConicFiber) -> ConicPoint:
    # t = 2:  -(x+y)^2 + s(x+y) + (u-s) y - 1 = 0, put p = x + y
    # t = -2: -(x-y)^2 + s(x-y) + (u+s) y - 1 = 0, put p = x - y
    # u -+ s != 0 because F = (s -+ u)^2 on these planes
    s, t, u = fiber.triple
    F = fiber.field
    sign = 1 if t == 2 else -1
    # p = 0 leaves (u -+ s) y = 1
    y = F.one / (u - sign * s)
    x = -sign * y
    if fiber.affine_value(x, y) != 0:
        raise InvariantError("special fibre collapse identity failed")
    return ConicPoint("affine", x, y)


def conic_find_point(fiber: ConicFiber, bound: int = DEFAULT_BOUND) -> ConicPoint:
    """A point on the fibre conic, in diagonal or (special fibre) affine coordinates."""
    F = fiber.field
    if fiber.special:
        return _special_point(fiber)
    c, f = fiber.c, fiber.f
    gamma = F.sqrt(c)
    if gamma is not None and gamma != 0:
        two = F(2)
        return ConicPoint("diagonal", (f + 1) / two, (f - 1) / (two * gamma))
    phi = F.sqrt(f)
    if phi is not None:
        return ConicPoint("diagonal", phi, F.zero)
    if F != QQ:
        for k in range(F.p):
            nu = F(k)
            mu = F.sqrt(c * nu * nu + f)
            if mu is not None:
                return ConicPoint("diagonal", mu, nu)
        raise InvariantError("a smooth conic over F_p always has a point")
    verdict = conic_solvable_q(fiber)
    if not verdict.solvable:
        raise Insolvable(f"mu^2 - ({c}) nu^2 = {f} has no rational point",
                         {"class": (c, f), "failing_places": list(verdict.failing)})
    for layer in rational_layers(bound):
        for nu in sorted(layer, key=lambda q: (abs(q), q < 0)):
            mu = QQ.sqrt(c * nu * nu + f)
            if mu is not None:
                return ConicPoint("diagonal", mu, nu)
    raise SearchExhausted(f"no point with height(nu) <= {bound} on a solvable conic",
                          {"bound": bound})


def fiber_point_to_matrices(fiber: ConicFiber, point: ConicPoint):
    """(M, g_t) with det M = 1, tr M = s, tr(M g_t) = u."""
    if point.kind == "diagonal":
        x, y = fiber.inverse(point.first, point.second)
    else:
        x, y = point.first, point.second
    s, t, u = fiber.triple
    M = Mat2(-x + s, y, t * x + y - u, x)
    g = companion(t, fiber.field)
    if M.det() != 1 or M.trace() != s or (M * g).trace() != u:
        raise InvariantError(f"fibre point {point} does not give a pair over {fiber.triple}")
    return M, g

