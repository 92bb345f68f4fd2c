"""Hot loops of the brute-force oracle.

Two interchangeable backends with identical signatures: numba-compiled loops
(``_numba``) and vectorized numpy (``_numpy``). ``SL2WORDS_BACKEND`` selects
one of ``numba``, ``numpy`` or ``auto`` (numba when importable, the default).

Every kernel works on integer matrices mod p stored as rows ``(a, b, c, d)``
and takes a half-open range ``[lo, hi)`` of first-matrix indices, so the
public wrappers can split work across threads (``jobs``).
"""

from __future__ import annotations

import importlib
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np


def load_backend(name: str):
    if name == "numba":
        return importlib.import_module("._numba", __name__)
    if name == "numpy":
        return importlib.import_module("._numpy", __name__)
    raise ValueError(f"unknown kernel backend {name!r}")


def _select():
    wanted = os.environ.get("SL2WORDS_BACKEND", "auto").strip().lower()
    if wanted == "auto":
        try:
            return "numba", load_backend("numba")
        except ImportError:
            return "numpy", load_backend("numpy")
    return wanted, load_backend(wanted)


BACKEND, _impl = _select()


def _split(lo, hi, jobs):
    jobs = max(1, min(jobs, hi - lo))
    edges = np.linspace(lo, hi, jobs + 1).astype(int)
    return list(zip(edges[:-1], edges[1:]))


def _run(fn, args, n, jobs):
    parts = _split(0, n, jobs)
    if len(parts) == 1:
        return fn(*args, 0, n)
    with ThreadPoolExecutor(len(parts)) as pool:
        results = list(pool.map(lambda r: fn(*args, int(r[0]), int(r[1])), parts))
    return sum(results[1:], results[0])


def sl2_array(p: int) -> np.ndarray:
    """All of SL(2, F_p) as an (N, 4) int64 array in lexicographic order."""
    g = np.stack(np.meshgrid(*[np.arange(p)] * 4, indexing="ij"), -1).reshape(-1, 4)
    det = (g[:, 0] * g[:, 3] - g[:, 1] * g[:, 2]) % p
    return np.ascontiguousarray(g[det == 1 % p].astype(np.int64))


def inverse_array(mats: np.ndarray, p: int) -> np.ndarray:
    a, b, c, d = mats.T
    return np.ascontiguousarray(np.stack([d, (-b) % p, (-c) % p, a], axis=1))


def matrix_code(entries, p: int) -> int:
    a, b, c, d = (int(x) % p for x in entries)
    return ((a * p + b) * p + c) * p + d


def word_codes(word) -> np.ndarray:
    table = {("x", 1): 0, ("x", -1): 1, ("y", 1): 2, ("y", -1): 3}
    return np.array([table[l] for l in word.letters], dtype=np.int64)


def word_image_histogram(mats, codes, p, jobs=1, impl=None):
    """Counts of w(A, B) over all pairs, indexed by :func:`matrix_code`."""
    impl = impl or _impl
    invs = inverse_array(mats, p)
    return _run(impl.word_image_histogram, (mats, invs, codes, p), len(mats), jobs)


def surface_histogram(exps, coeffs, p, jobs=1, impl=None):
    """Number of (s, t, u) in F_p^3 with poly(s, t, u) = v, for each v."""
    impl = impl or _impl
    return _run(impl.surface_histogram, (exps, coeffs, p), p, jobs)


def equivalence_counts(mats, p, n, jobs=1, impl=None):
    impl = impl or _impl
    return _run(impl.equivalence_counts, (mats, p, n), len(mats), jobs)
