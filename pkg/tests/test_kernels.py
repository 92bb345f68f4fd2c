import os
import subprocess
import sys

import numpy as np
import pytest

from sl2words import kernels
from sl2words.fields import GF, smallest_nonresidue
from sl2words.matrices import Mat2, common_eigenvector, evaluate_word
from sl2words.polynomial import MARKOFF_F, coefficient_arrays, eval_mod
from sl2words.words import parse_word

BACKENDS = ["numpy", "numba"]


def _mats(p):
    F = GF(p)
    return [Mat2(*(F(int(x)) for x in row)) for row in kernels.sl2_array(p)]


@pytest.mark.parametrize("p,n", [(2, 6), (3, 24), (5, 120), (7, 336)])
def test_sl2_array_size(p, n):
    arr = kernels.sl2_array(p)
    assert arr.shape == (n, 4)
    assert len({tuple(r) for r in arr}) == n


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("word", ["[x,y]", "x^2Yx", "[x^2,y]"])
def test_word_histogram_against_exact_matrices(backend, word):
    p = 3
    w = parse_word(word)
    impl = kernels.load_backend(backend)
    hist = kernels.word_image_histogram(kernels.sl2_array(p), kernels.word_codes(w), p, impl=impl)
    expected = np.zeros(p**4, np.int64)
    mats = _mats(p)
    for A in mats:
        for B in mats:
            expected[kernels.matrix_code([x.v for x in evaluate_word(w, A, B).entries()], p)] += 1
    assert np.array_equal(hist, expected)


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("p", [3, 5, 7])
def test_surface_histogram(backend, p):
    exps, coeffs = coefficient_arrays(MARKOFF_F, p)
    hist = kernels.surface_histogram(exps, coeffs, p, impl=kernels.load_backend(backend))
    expected = np.zeros(p, np.int64)
    for s in range(p):
        for t in range(p):
            for u in range(p):
                expected[eval_mod(MARKOFF_F, s, t, u, p)] += 1
    assert np.array_equal(hist, expected)
    assert hist.sum() == p**3


@pytest.mark.parametrize("backend", BACKENDS)
def test_equivalence_counts_against_exact_matrices(backend):
    p = 3
    got = kernels.equivalence_counts(kernels.sl2_array(p), p, smallest_nonresidue(p),
                                     impl=kernels.load_backend(backend))
    mats = _mats(p)
    eig = sum(common_eigenvector(A, B) for A in mats for B in mats)
    assert list(got) == [576, eig, eig, eig, eig, 0]


@pytest.mark.parametrize("jobs", [1, 3])
def test_backends_agree(jobs):
    p = 7
    mats = kernels.sl2_array(p)
    codes = kernels.word_codes(parse_word("[x,y]"))
    a, b = (kernels.load_backend(x) for x in BACKENDS)
    assert np.array_equal(kernels.word_image_histogram(mats, codes, p, jobs, a),
                          kernels.word_image_histogram(mats, codes, p, jobs, b))
    n = smallest_nonresidue(p)
    assert np.array_equal(kernels.equivalence_counts(mats, p, n, jobs, a),
                          kernels.equivalence_counts(mats, p, n, jobs, b))


@pytest.mark.parametrize("backend", BACKENDS)
def test_env_flag_selects_backend(backend):
    code = "from sl2words import kernels; print(kernels.BACKEND)"
    env = {**os.environ, "SL2WORDS_BACKEND": backend}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.stdout.strip() == backend


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.load_backend("cuda")


def test_benchmark_script_runs():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    script = os.path.join(root, "benchmarks", "bench_kernels.py")
    out = subprocess.run([sys.executable, script, "--p", "3", "--repeat", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert "word_image_histogram" in out.stdout
