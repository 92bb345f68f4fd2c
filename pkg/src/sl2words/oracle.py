"""Exhaustive ground truth over SL(2, F_p) for small primes.

Counts go through the histogram kernels: one pass over all pairs (A, B)
yields the number of solutions of w(A, B) = alpha for every alpha at once.
"""

from __future__ import annotations

import csv
import json
import time
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import BoundExceeded, InvariantError
from .fields import GF, _is_prime, smallest_nonresidue
from .kernels import _numpy
from .matrices import Mat2, companion
from .surfaces import enumerate_points_fp, markoff
from .words import COMMUTATOR, Word

DEFAULT_PRIME_BOUND = 13


def _check_prime(p: int, bound: int) -> None:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > bound:
        raise BoundExceeded(f"p = {p} exceeds the exhaustive bound {bound}")


def enumerate_sl2(p: int, bound: int = DEFAULT_PRIME_BOUND) -> list:
    """SL(2, F_p) as Mat2 values, lexicographic in (a, b, c, d)."""
    _check_prime(p, bound)
    F = GF(p)
    return [Mat2(*(F(int(x)) for x in row)) for row in kernels.sl2_array(p)]


@lru_cache(maxsize=64)
def _image_histogram(w: Word, p: int, jobs: int) -> np.ndarray:
    mats = kernels.sl2_array(p)
    return kernels.word_image_histogram(mats, kernels.word_codes(w), p, jobs=jobs)


def word_image_counts(w: Word, p: int, jobs: int = 1,
                      bound: int = DEFAULT_PRIME_BOUND) -> np.ndarray:
    """#{(A, B) : w(A, B) = alpha} for every alpha, indexed by matrix code."""
    _check_prime(p, bound)
    hist = _image_histogram(w, p, jobs)
    total = len(kernels.sl2_array(p)) ** 2
    if hist.sum() != total:
        raise InvariantError(f"histogram sums to {hist.sum()}, expected {total}")
    return hist


class Count(NamedTuple):
    count: int
    pairs: list | None


def brute_force_count(w: Word, alpha: Mat2, p: int, emit_list: bool = False, jobs: int = 1,
                      bound: int = DEFAULT_PRIME_BOUND) -> Count:
    """Exact #{(A, B) in SL(2, F_p)^2 : w(A, B) = alpha}."""
    code = kernels.matrix_code([x.v if hasattr(x, "v") else x for x in alpha.entries()], p)
    count = int(word_image_counts(w, p, jobs, bound)[code])
    pairs = None
    if emit_list:
        pairs = _solution_pairs(w, code, p)
        if len(pairs) != count:
            raise InvariantError("listed pairs disagree with the kernel count")
    return Count(count, pairs)


def _solution_pairs(w: Word, code: int, p: int) -> list:
    mats = kernels.sl2_array(p)
    invs = kernels.inverse_array(mats, p)
    wc = kernels.word_codes(w)
    F = GF(p)
    out = []
    step = max(1, (1 << 18) // len(mats))
    for lo in range(0, len(mats), step):
        hi = min(len(mats), lo + step)
        hits = np.argwhere(_numpy.word_image_codes(mats, invs, wc, p, lo, hi) == code)
        for i, j in hits:
            A = Mat2(*(F(int(x)) for x in mats[lo + i]))
            B = Mat2(*(F(int(x)) for x in mats[j]))
            out.append((A, B))
    return out


def conjugacy_classes(p: int, bound: int = DEFAULT_PRIME_BOUND) -> list:
    """Conjugacy classes of SL(2, F_p) as sorted lists of matrix codes."""
    _check_prime(p, bound)
    mats = kernels.sl2_array(p)
    invs = kernels.inverse_array(mats, p)
    # h g h^-1 is the word x y X evaluated at (h, g)
    conj = _numpy.word_image_codes(mats, invs, kernels.word_codes(Word((("x", 1), ("y", 1), ("x", -1)))),
                                   p, 0, len(mats))
    classes = {tuple(sorted(set(conj[:, j].tolist()))) for j in range(len(mats))}
    return sorted(list(c) for c in classes)


def commuting_pairs_check(p: int, jobs: int = 1, bound: int = DEFAULT_PRIME_BOUND) -> dict:
    """#{[A, B] = I} against (number of classes) * |SL(2, F_p)|."""
    order = p * (p * p - 1)
    k = len(conjugacy_classes(p, bound))
    count = brute_force_count(COMMUTATOR, Mat2.identity(GF(p)), p, jobs=jobs, bound=bound).count
    return {"p": p, "count": count, "classes": k, "order": order, "ok": count == k * order}


def admissible_traces(p: int) -> list:
    """a in F_p with a != +-2, i.e. d = a - 2 avoids 0 and -4."""
    return [a for a in range(p) if (a - 2) % p != 0 and (a + 2) % p != 0]


def fiber_count_rows(p: int, corrected: bool = False, jobs: int = 1,
                     bound: int = DEFAULT_PRIME_BOUND) -> list:
    """Compare #{[A, B] = g_a} with factor * #M_{a-2}(F_p) for admissible a.

    The stated factor is p - 1. With ``corrected`` it is p - chi(a^2 - 4),
    the number of F_p-points of the norm-one torus centralizing g_a.
    """
    _check_prime(p, bound)
    F = GF(p)
    rows = []
    for a in admissible_traces(p):
        d = (a - 2) % p
        count = brute_force_count(COMMUTATOR, companion(F(a)), p, jobs=jobs, bound=bound).count
        points = enumerate_points_fp(markoff(d, F), p, jobs=jobs).count
        factor = p - F.legendre(F(a * a - 4)) if corrected else p - 1
        rows.append({"p": p, "a": a, "d": d, "count": count, "markoff_points": points,
                     "factor": factor, "predicted": factor * points,
                     "ok": count == factor * points})
    return rows


def flatness_check(p: int, w: Word = COMMUTATOR, jobs: int = 1,
                   bound: int = DEFAULT_PRIME_BOUND) -> dict:
    """Counts of w(A, B) = alpha grouped by tr(alpha) over noncentral alpha.

    Returns {trace: sorted distinct counts}; equal fibres means one count each.
    """
    hist = word_image_counts(w, p, jobs, bound)
    out: dict = {}
    for row in kernels.sl2_array(p):
        a, b, c, d = (int(x) for x in row)
        if b == 0 and c == 0 and a == d:
            continue
        tr = (a + d) % p
        out.setdefault(tr, set()).add(int(hist[kernels.matrix_code(row, p)]))
    return {tr: sorted(v) for tr, v in sorted(out.items())}


def verify_equivalences(p: int, jobs: int = 1, bound: int = DEFAULT_PRIME_BOUND) -> dict:
    """Exhaustive check that, for every pair (A, B), the conditions

    (1) common eigenvector over F_p^2, (2) det(AB - BA) = 0,
    (3) tr [A, B] = 2, (4) F(tr A, tr B, tr AB) = 0

    hold or fail together.
    """
    _check_prime(p, bound)
    if p == 2:
        raise ValueError("verify_equivalences needs an odd prime")
    start = time.perf_counter()
    mats = kernels.sl2_array(p)
    res = kernels.equivalence_counts(mats, p, smallest_nonresidue(p), jobs=jobs)
    pairs, c1, c2, c3, c4, bad = (int(x) for x in res)
    return {"p": p, "pairs": pairs, "common_eigenvector": c1, "det_commutator_zero": c2,
            "trace_commutator_two": c3, "on_cayley_cubic": c4, "violations": bad,
            "seconds": round(time.perf_counter() - start, 4), "backend": kernels.BACKEND}


def write_rows_csv(rows: list, fh) -> None:
    if not rows:
        return
    writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)


def write_rows_json(rows, fh) -> None:
    json.dump(rows, fh, indent=2)
    fh.write("\n")
