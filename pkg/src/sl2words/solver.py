"""Solving w(X, Y) = alpha in SL(2) over Q and F_p.

The generic path walks the trace surface P_w = tr(alpha), lifts a surface
point to a pair (M, g_t) through its fibre conic, and conjugates w(M, g_t)
onto alpha. The commutator word has extra entry points for the trace +-2
and central targets. Every returned pair is re-checked by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .brauer import QuaternionClass, quaternion_invariants
from .conic import conic_find_point, fiber_at, fiber_point_to_matrices
from .errors import (CentralInput, EmptyVariety, InvariantError, Insolvable, NotInSL2,
                     SearchExhausted, TrivialWordError, Unsupported)
from .fields import QQ, element_to_json
from .matrices import (ElementClass, Mat2, classify_element, conjugating_matrix, evaluate_word,
                       trace_triple)
from .surfaces import DEFAULT_BOUND, markoff, search_points_fp, search_points_q, trace_surface
from .words import COMMUTATOR, X, Y, Word, word_class

#: surface points tried over Q before giving up
MAX_FIBERS = 500


@dataclass(frozen=True)
class SolutionPair:
    A: Mat2
    B: Mat2
    word: Word
    alpha: Mat2
    method: str
    witness: dict = dc_field(default_factory=dict)
    conjugator: Mat2 | None = None
    verified: bool = False

    @property
    def triple(self):
        return trace_triple(self.A, self.B)

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "alpha": self.alpha.to_json(),
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "triple": [element_to_json(x) for x in self.triple],
            "method": self.method,
            "witness": self.witness,
            "conjugator": self.conjugator.to_json() if self.conjugator else None,
            "verified": self.verified,
        }


def _verified(w: Word, alpha: Mat2, A: Mat2, B: Mat2, method: str, witness=None,
              conjugator=None) -> SolutionPair:
    if A.det() != 1 or B.det() != 1 or evaluate_word(w, A, B) != alpha:
        raise InvariantError(f"{method} produced a pair with w(A, B) != alpha")
    return SolutionPair(A, B, w, alpha, method, witness or {}, conjugator, True)


def _conjugate_onto(w, alpha, M, g, beta, method, witness):
    h = conjugating_matrix(beta, alpha)
    hi = h.inverse()
    return _verified(w, alpha, h * M * hi, h * g * hi, method, witness, h)


def _check_field(alpha: Mat2):
    if alpha.det() != 1:
        raise NotInSL2(f"det {alpha} = {alpha.det()} != 1")
    F = alpha.field
    if F.characteristic == 2:
        raise Unsupported("characteristic 2 is not supported")
    return F


def solve_word_equation(w: Word, alpha: Mat2, bound: int = DEFAULT_BOUND) -> SolutionPair:
    """A verified pair (A, B) with w(A, B) = alpha.

    Raises :class:`Insolvable` (with certificate) when no pair exists,
    :class:`SearchExhausted` when the bounded search came up empty and
    :class:`Unsupported` for word/target combinations outside the method.
    """
    if w.trivial:
        raise TrivialWordError("the identity word has no equation to solve")
    F = _check_field(alpha)
    I = Mat2.identity(F)
    if alpha == I:
        return _verified(w, alpha, I, I, "identity")
    if w == X or w == Y:
        return _verified(w, alpha, *((alpha, I) if w == X else (I, alpha)), "projection")

    kind = classify_element(alpha)
    if w in (COMMUTATOR, COMMUTATOR.inverse()):
        swapped = w != COMMUTATOR  # [y, x](B, A) = [x, y](A, B)
        if kind is ElementClass.SEMISIMPLE:
            sol = _solve_generic(COMMUTATOR, alpha, bound)
        elif kind is ElementClass.UNIPOTENT:
            sol = solve_commutator_unipotent(alpha)
        elif kind is ElementClass.NEGATIVE_UNIPOTENT:
            sol = solve_commutator_negative(alpha)
        else:
            sol = solve_minus_identity(F)
        if swapped:
            return _verified(w, alpha, sol.B, sol.A, sol.method, sol.witness, sol.conjugator)
        return sol
    if word_class(w).in_commutator_subgroup and kind is ElementClass.SEMISIMPLE:
        return _solve_generic(w, alpha, bound)
    raise Unsupported(f"no method for w = {w} with a {kind.value} target")


def _fiber_solution(w, alpha, pt, bound):
    fiber = fiber_at(pt)
    point = conic_find_point(fiber, bound)
    M, g = fiber_point_to_matrices(fiber, point)
    beta = evaluate_word(w, M, g)
    if beta.trace() != alpha.trace():
        raise InvariantError(f"tr w(M, g_t) = {beta.trace()} != {alpha.trace()}")
    witness = {"point": [element_to_json(x) for x in pt.triple],
               "conic_point": point.to_json()}
    return _conjugate_onto(w, alpha, M, g, beta, "fiber", witness)


def _solve_generic(w: Word, alpha: Mat2, bound: int) -> SolutionPair:
    F = alpha.field
    a = alpha.trace()
    spec = trace_surface(w, a, F)
    if F == QQ:
        tried = 0
        seen = set()
        for height in _height_schedule(bound):
            for strategy in ("split", "grid"):
                try:
                    for pt in search_points_q(spec, height, strategy, require_V=True):
                        if pt.triple in seen:
                            continue
                        seen.add(pt.triple)
                        tried += 1
                        try:
                            return _fiber_solution(w, alpha, pt, bound)
                        except (Insolvable, SearchExhausted):
                            pass
                        if tried >= MAX_FIBERS:
                            raise SearchExhausted(f"{tried} fibres of {spec} tried without a point",
                                                  {"bound": height, "fibers_tried": tried})
                except SearchExhausted as exc:
                    if exc.bounds.get("fibers_tried"):
                        raise
        raise SearchExhausted(f"no solvable fibre of {spec} within height {bound}",
                              {"bound": bound, "fibers_tried": tried})
    for pt in search_points_fp(spec, require_V=True):
        return _fiber_solution(w, alpha, pt, bound)
    # reducible pairs (F = 0) give unipotent w(A, B), never trace a != 2
    raise EmptyVariety(f"{spec} has no F_{F.p}-point off the Cayley cubic",
                       {"surface": str(spec), "field": F.name, "points_off_cubic": 0})


def _height_schedule(bound: int) -> list:
    """Doubling heights up to ``bound``, so a cheap grid point is not hidden
    behind an exhaustive split search at full height."""
    out = [h for h in (4, 8, 16, 32) if h < bound]
    return out + [bound]


def _brute_force_pair(w: Word, alpha: Mat2, method: str) -> SolutionPair:
    from .oracle import enumerate_sl2

    F = alpha.field
    mats = enumerate_sl2(F.p)
    for A in mats:
        for B in mats:
            if evaluate_word(w, A, B) == alpha:
                return _verified(w, alpha, A, B, method)
    raise EmptyVariety(f"no pair in SL(2, F_{F.p})^2 satisfies {w} = {alpha}",
                       {"exhaustive_count": 0, "pairs_checked": len(mats) ** 2})


def solve_commutator_unipotent(alpha: Mat2) -> SolutionPair:
    """[A, B] = alpha for tr alpha = 2, alpha != I.

    With A = [[lam, x], [0, 1/lam]] and B = [[mu, y], [0, 1/mu]] the
    commutator is [[1, x*lam*(1 - mu^2) - y*mu*(1 - lam^2)], [0, 1]];
    lam = 1, mu = 2 and x = 1/(1 - mu^2) reach the Jordan block J, which is
    then conjugated onto alpha. F_3 has no usable mu and is searched
    exhaustively (there the search is empty: [SL(2,3), SL(2,3)] = Q8).
    """
    F = _check_field(alpha)
    if alpha.is_scalar():
        raise CentralInput("alpha = I: use any commuting pair")
    if alpha.trace() != 2:
        raise ValueError("solve_commutator_unipotent needs tr(alpha) = 2")
    if F != QQ and F.p == 3:
        return _brute_force_pair(COMMUTATOR, alpha, "unipotent-exhaustive")
    lam, mu = F.one, F(2)
    x = F.one / (1 - mu * mu)
    A = Mat2(lam, x, F.zero, F.one / lam)
    B = Mat2(mu, F.zero, F.zero, F.one / mu)
    J = Mat2(F.one, F.one, F.zero, F.one)
    beta = evaluate_word(COMMUTATOR, A, B)
    if beta != J:
        raise InvariantError("triangular family missed the Jordan block")
    witness = {"lambda": element_to_json(lam), "mu": element_to_json(mu),
               "x": element_to_json(x), "y": 0}
    return _conjugate_onto(COMMUTATOR, alpha, A, B, beta, "unipotent", witness)


def solve_commutator_negative(alpha: Mat2, bound: int = DEFAULT_BOUND) -> SolutionPair:
    """[A, B] = alpha for tr alpha = -2, alpha != -I, through M_{-4} minus the origin."""
    F = _check_field(alpha)
    if alpha.is_scalar():
        raise CentralInput("alpha = -I: see solve_minus_identity")
    if alpha.trace() != -2:
        raise ValueError("solve_commutator_negative needs tr(alpha) = -2")
    minus_I = -Mat2.identity(F)
    if F == QQ:
        points = [(Fraction(3), Fraction(3), Fraction(6))]
    else:
        points = [pt.triple for pt in search_points_fp(markoff(-4, F), require_V=True)
                  if any(pt.triple)]
    for triple in points:
        fiber = fiber_at(triple)
        point = conic_find_point(fiber, bound)
        M, g = fiber_point_to_matrices(fiber, point)
        beta = evaluate_word(COMMUTATOR, M, g)
        if beta.trace() != -2:
            raise InvariantError("pair over M_{-4} has commutator trace != -2")
        if beta == minus_I:
            continue
        witness = {"point": [element_to_json(x) for x in triple],
                   "conic_point": point.to_json()}
        return _conjugate_onto(COMMUTATOR, alpha, M, g, beta, "negative-unipotent", witness)
    return _brute_force_pair(COMMUTATOR, alpha, "negative-unipotent-exhaustive")


def solve_minus_identity(field) -> SolutionPair:
    """[A, B] = -I: impossible over Q, solved by anticommuting matrices over F_p.

    Any solution has trace triple (0, 0, 0), whose fibre over Q is the
    conic of the quaternion class (-1, -1).
    """
    if field == QQ:
        inv = quaternion_invariants(QuaternionClass(-1, -1))
        raise EmptyVariety("[x, y] = -I has no rational solution: -1 is not a sum of two squares",
                           {"class": [-1, -1], "invariants": inv.to_json()})
    F = field
    if F.characteristic == 2:
        raise Unsupported("characteristic 2 is not supported")
    minus_I = -Mat2.identity(F)
    for k in range(F.p):
        a = F(k)
        b = F.sqrt(-1 - a * a)
        if b is not None:
            A = Mat2(a, b, b, -a)
            B = Mat2(F.zero, -F.one, F.one, F.zero)
            if A * B != -(B * A):
                raise InvariantError("A and B fail to anticommute")
            return _verified(COMMUTATOR, minus_I, A, B, "minus-identity",
                             {"a": a.v, "b": b.v})
    raise InvariantError(f"-1 is a sum of two squares in every F_p, but not found for p={F.p}")
