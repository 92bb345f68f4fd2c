"""Time the numba and numpy kernel backends on the same inputs.

    python benchmarks/bench_kernels.py --p 5 7 11 13 --jobs 1 4

Each kernel runs once to warm up (numba compiles on first call), then
``--repeat`` times; the best wall time is reported. Results must agree.
"""

import argparse
import time

import numpy as np

from sl2words import kernels
from sl2words.fields import smallest_nonresidue
from sl2words.polynomial import MARKOFF_F, coefficient_arrays
from sl2words.words import parse_word


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def cases(p, jobs):
    mats = kernels.sl2_array(p)
    codes = kernels.word_codes(parse_word("[x^2,y]"))
    exps, coeffs = coefficient_arrays(MARKOFF_F, p)
    n = smallest_nonresidue(p)
    return {
        "word_image_histogram": lambda impl: kernels.word_image_histogram(mats, codes, p, jobs, impl),
        "equivalence_counts": lambda impl: kernels.equivalence_counts(mats, p, n, jobs, impl),
        "surface_histogram": lambda impl: kernels.surface_histogram(exps, coeffs, p, jobs, impl),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[5, 7, 11, 13])
    ap.add_argument("--jobs", type=int, nargs="+", default=[1])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-equivalences-above", type=int, default=11,
                    help="the eigenvector incidence table grows like p^5")
    args = ap.parse_args()

    backends = {name: kernels.load_backend(name) for name in ("numba", "numpy")}
    print(f"{'kernel':<22} {'p':>3} {'jobs':>4} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for p in args.p:
        for jobs in args.jobs:
            for name, run in cases(p, jobs).items():
                if name == "equivalence_counts" and p > args.skip_equivalences_above:
                    continue
                t_nb, out_nb = best_of(lambda: run(backends["numba"]), args.repeat)
                t_np, out_np = best_of(lambda: run(backends["numpy"]), args.repeat)
                if not np.array_equal(out_nb, out_np):
                    raise SystemExit(f"{name} p={p}: backends disagree")
                print(f"{name:<22} {p:>3} {jobs:>4} {t_nb:>10.4f} {t_np:>10.4f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
