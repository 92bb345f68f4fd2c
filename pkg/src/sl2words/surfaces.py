"""Markoff surfaces F(s,t,u) = d and trace surfaces P_w(s,t,u) = a.

Points over F_p are counted exhaustively (through :mod:`sl2words.kernels`);
points over Q are found by a deterministic bounded search that prefers
fibres where t^2 - 4 is a nonzero square, writing t = v + 1/v.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, NamedTuple

from . import kernels
from .errors import InvariantError, SearchExhausted
from .fields import QQ, GF, element_to_json
from .polynomial import MARKOFF_F, TracePoly, coefficient_arrays, eval_mod, poly_eval
from .trace import trace_polynomial
from .words import COMMUTATOR, Word

DEFAULT_BOUND = 50


@dataclass(frozen=True)
class SurfaceSpec:
    """Either ``Markoff(d)`` (F = d) or ``Trace(w, a)`` (P_w = a)."""

    kind: str
    field: object
    value: object  # d for Markoff, a for Trace
    word: Word | None = None
    poly: TracePoly = dc_field(init=False, compare=False, repr=False)

    def __post_init__(self):
        poly = MARKOFF_F if self.kind == "markoff" else trace_polynomial(self.word)
        object.__setattr__(self, "poly", poly)
        object.__setattr__(self, "value", self.field(self.value))

    @property
    def target(self):
        return self.value

    def defining_value(self, pt):
        """poly(pt) - target; zero exactly on the surface."""
        return poly_eval(self.poly, tuple(self.field(x) for x in pt)) - self.value

    def contains(self, pt) -> bool:
        return self.defining_value(pt) == 0

    def reduce_mod(self, p: int) -> "SurfaceSpec":
        return SurfaceSpec(self.kind, GF(p), GF(p)(self.value), self.word)

    def __str__(self):
        if self.kind == "markoff":
            return f"Markoff(d={element_to_json(self.value)})"
        return f"Trace(w={self.word}, a={element_to_json(self.value)})"


def markoff(d, field=QQ) -> SurfaceSpec:
    return SurfaceSpec("markoff", field, d)


def trace_surface(w: Word, a, field=QQ) -> SurfaceSpec:
    return SurfaceSpec("trace", field, a, w)


@dataclass(frozen=True)
class SurfacePoint:
    s: object
    t: object
    u: object
    F: object = dc_field(init=False)
    in_V: bool = dc_field(init=False)

    def __post_init__(self):
        f = poly_eval(MARKOFF_F, (self.s, self.t, self.u))
        object.__setattr__(self, "F", f)
        object.__setattr__(self, "in_V", f != 0)

    @property
    def triple(self):
        return (self.s, self.t, self.u)

    def to_json(self):
        return {"s": element_to_json(self.s), "t": element_to_json(self.t),
                "u": element_to_json(self.u), "F": element_to_json(self.F), "in_V": self.in_V}


class MarkoffInfo(NamedTuple):
    smooth: bool
    singular_points: list


def markoff_info(d, field=QQ) -> MarkoffInfo:
    """Smoothness of M_d and its singular points (gradient of F vanishes there)."""
    d = field(d)
    if d == 0:
        pts = [(2, 2, 2), (2, -2, -2), (-2, 2, -2), (-2, -2, 2)]
        return MarkoffInfo(False, [tuple(field(x) for x in p) for p in pts])
    if d == -4:
        return MarkoffInfo(False, [(field.zero, field.zero, field.zero)])
    return MarkoffInfo(True, [])


class PointCount(NamedTuple):
    count: int
    points: list | None


def enumerate_points_fp(spec: SurfaceSpec, p: int, emit_list: bool = False,
                        jobs: int = 1) -> PointCount:
    """Exact number of F_p-points over all p^3 triples."""
    target = GF(p)(spec.value).v
    exps, coeffs = coefficient_arrays(spec.poly, p)
    hist = kernels.surface_histogram(exps, coeffs, p, jobs=jobs)
    count = int(hist[target])
    points = None
    if emit_list:
        F = GF(p)
        points = [SurfacePoint(F(s), F(t), F(u))
                  for s in range(p) for t in range(p) for u in range(p)
                  if eval_mod(spec.poly, s, t, u, p) == target]
        if len(points) != count:
            raise InvariantError("kernel count disagrees with the point list")
    return PointCount(count, points)


def rational_layers(bound: int) -> list:
    """Rationals n/m with max(|n|, m) = h, for h = 0..bound, each layer sorted."""
    layers: list = [[] for _ in range(bound + 1)]
    for den in range(1, bound + 1):
        for num in range(-bound, bound + 1):
            if gcd(num, den) == 1:
                layers[max(abs(num), den)].append(Fraction(num, den))
    for layer in layers:
        layer.sort()
    return layers


def _height(x: Fraction) -> int:
    return max(abs(x.numerator), x.denominator)


def _grid_pairs(first: list, second_layers: list, bound: int):
    """Pairs (a, b), a from ``first`` (sorted), b any grid rational,
    ordered by max height then lexicographically."""
    firsts = [[] for _ in range(bound + 1)]
    for x in first:
        if _height(x) <= bound:
            firsts[_height(x)].append(x)
    for h in range(1, bound + 1):
        a_upto = sorted(x for k in range(h + 1) for x in firsts[k])
        b_upto = sorted(x for k in range(h + 1) for x in second_layers[k])
        for a in a_upto:
            bs = b_upto if _height(a) == h else second_layers[h]
            for b in bs:
                yield a, b


def rational_roots(coeffs) -> list | None:
    """Rational roots (ascending, distinct) of sum c_k u^k; None if identically zero."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return None
    deg = len(coeffs) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [-coeffs[0] / coeffs[1]]
    if deg == 2:
        c, b, a = coeffs
        r = QQ.sqrt(b * b - 4 * a * c)
        if r is None:
            return []
        return sorted({(-b - r) / (2 * a), (-b + r) / (2 * a)})
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                      x, domain="QQ")
    roots = poly.ground_roots()
    return sorted(Fraction(int(r.p), int(r.q)) for r in roots)


class _UCoefficients:
    """Integer evaluation of the u-coefficients of ``poly - target``.

    At s = a/b, t = c/e every coefficient shares the denominator
    b^Ds * e^Dt * q (q the target's denominator), so the polynomial in u is
    evaluated in exact integers without Fraction overhead.
    """

    def __init__(self, spec: SurfaceSpec):
        self.parts = [[(i, j, c) for (i, j, _), c in part.terms.items()]
                      for part in spec.poly.u_coefficients()]
        self.ds = max((i for part in self.parts for i, _, _ in part), default=0)
        self.dt = max((j for part in self.parts for _, j, _ in part), default=0)
        target = Fraction(spec.value)
        self.tp, self.tq = target.numerator, target.denominator

    def __call__(self, s: Fraction, t: Fraction) -> list:
        a, b, c, e = s.numerator, s.denominator, t.numerator, t.denominator
        sp = [a**i * b ** (self.ds - i) for i in range(self.ds + 1)]
        tp = [c**j * e ** (self.dt - j) for j in range(self.dt + 1)]
        out = [self.tq * sum(k * sp[i] * tp[j] for i, j, k in part) for part in self.parts]
        out[0] -= self.tp * b**self.ds * e**self.dt
        return out


def integer_rational_roots(coeffs) -> list | None:
    """As :func:`rational_roots` for integer coefficients, with an isqrt fast path."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) == 3:
        c, b, a = coeffs
        disc = b * b - 4 * a * c
        if disc < 0:
            return []
        r = isqrt(disc)
        if r * r != disc:
            return []
        return sorted({Fraction(-b - r, 2 * a), Fraction(-b + r, 2 * a)})
    if len(coeffs) > 3 and not _roots_mod_small_primes(coeffs):
        return []
    return rational_roots(coeffs)


_SIEVE_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29)


def _roots_mod_small_primes(coeffs) -> bool:
    """False when some small prime not dividing the leading coefficient sees no root.

    A rational root n/m has m | lead, so it reduces to a root mod any such prime.
    """
    lead = coeffs[-1]
    for q in _SIEVE_PRIMES:
        if lead % q == 0:
            continue
        cs = [c % q for c in coeffs]
        if not any(_horner(cs, x, q) == 0 for x in range(q)):
            return False
    return True


def _horner(cs, x, q):
    acc = 0
    for c in reversed(cs):
        acc = (acc * x + c) % q
    return acc


def search_points_q(spec: SurfaceSpec, bound: int = DEFAULT_BOUND, strategy: str = "split",
                    limit: int | None = None, require_V: bool = False) -> Iterator[SurfacePoint]:
    """Stream rational points of ``spec`` in a deterministic order.

    ``strategy="split"`` runs over t = v + 1/v (|v| > 1) so that t^2 - 4 is a
    nonzero square; ``"grid"`` runs over every grid t. The grid holds the
    rationals of height <= ``bound``; ``u`` is solved exactly. Raises
    :class:`SearchExhausted` when the grid ends without a single point.
    """
    if spec.field != QQ:
        raise ValueError("search_points_q needs a surface over Q")
    layers = rational_layers(bound)
    grid = [x for layer in layers for x in layer]
    if strategy == "split":
        pairs = _split_pairs([v for v in grid if abs(v) > 1], layers, bound)
    elif strategy == "grid":
        pairs = _grid_pairs(grid, layers, bound)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    ucoeffs = _UCoefficients(spec)
    emitted = 0
    seen = set()
    for t, s in pairs:
        roots = integer_rational_roots(ucoeffs(s, t))
        if roots is None:
            roots = [Fraction(0)]
        for u in roots:
            if (s, t, u) in seen:
                continue
            seen.add((s, t, u))
            pt = SurfacePoint(s, t, u)
            if require_V and not pt.in_V:
                continue
            if not spec.contains(pt.triple):
                raise InvariantError(f"search produced {pt} off the surface")
            yield pt
            emitted += 1
            if limit is not None and emitted >= limit:
                return
    if not emitted:
        raise SearchExhausted(f"no rational point of {spec} with height <= {bound}",
                              {"bound": bound, "strategy": strategy})


def _split_pairs(vs, layers, bound):
    """(t, s) pairs with t = v + 1/v; ordered by max(height v, height s)."""
    by_h = [[] for _ in range(bound + 1)]
    for v in vs:
        by_h[_height(v)].append(v)
    for h in range(1, bound + 1):
        v_upto = sorted(v for k in range(h + 1) for v in by_h[k])
        s_upto = sorted(x for k in range(h + 1) for x in layers[k])
        for v in v_upto:
            t = v + 1 / v
            for s in (s_upto if _height(v) == h else layers[h]):
                yield t, s


def _u_roots_fp(spec: SurfaceSpec, ucoeffs, s, t, F):
    p = F.p
    vals = [eval_mod(c, s, t, 0, p) for c in ucoeffs]
    vals[0] = (vals[0] - spec.value.v) % p
    while vals and vals[-1] % p == 0:
        vals.pop()
    if not vals:
        return list(range(p))
    deg = len(vals) - 1
    if deg == 0:
        return []
    if deg == 1:
        return [(-vals[0]) * pow(vals[1], -1, p) % p]
    if deg == 2 and p != 2:
        c, b, a = vals
        r = F.sqrt(b * b - 4 * a * c)
        if r is None:
            return []
        inv = pow(2 * a, -1, p)
        return sorted({(-b - r.v) * inv % p, (-b + r.v) * inv % p})
    return [u for u in range(p) if sum(c * pow(u, k, p) for k, c in enumerate(vals)) % p == 0]


def search_points_fp(spec: SurfaceSpec, prefer_split: bool = True,
                     require_V: bool = False) -> Iterator[SurfacePoint]:
    """Stream the F_p-points of ``spec``; split t (t^2 - 4 a nonzero square) first."""
    F = spec.field
    p = F.p

    def rank(t):
        if not prefer_split:
            return 0
        leg = F.legendre(t * t - 4)
        return {1: 0, -1: 1, 0: 2}[leg]

    ucoeffs = spec.poly.u_coefficients()
    for t in sorted(range(p), key=lambda t: (rank(t), t)):
        for s in range(p):
            for u in _u_roots_fp(spec, ucoeffs, s, t, F):
                pt = SurfacePoint(F(s), F(t), F(u))
                if require_V and not pt.in_V:
                    continue
                yield pt


def write_points_csv(points, fh) -> None:
    writer = csv.writer(fh)
    writer.writerow(["s", "t", "u", "F", "in_V"])
    for pt in points:
        row = pt.to_json()
        writer.writerow([row["s"], row["t"], row["u"], row["F"], int(row["in_V"])])


def commutator_surface(a, field=QQ) -> SurfaceSpec:
    return trace_surface(COMMUTATOR, a, field)
