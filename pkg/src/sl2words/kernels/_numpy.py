"""Vectorized numpy versions of the loop kernels (same signatures)."""

import numpy as np

_CHUNK = 1 << 20  # target number of pairs per vectorized block


def word_image_histogram(mats, invs, codes, p, lo, hi):
    n = mats.shape[0]
    hist = np.zeros(p**4, np.int64)
    step = max(1, _CHUNK // max(n, 1))
    for start in range(lo, hi, step):
        code = word_image_codes(mats, invs, codes, p, start, min(hi, start + step))
        hist += np.bincount(code.ravel(), minlength=p**4)
    return hist


def surface_histogram(exps, coeffs, p, lo, hi):
    maxdeg = int(exps.max()) if exps.size else 0
    x = np.arange(p, dtype=np.int64)
    pw = np.ones((maxdeg + 1, p), np.int64)
    for e in range(1, maxdeg + 1):
        pw[e] = pw[e - 1] * x % p
    hist = np.zeros(p, np.int64)
    for s in range(lo, hi):
        v = np.zeros((p, p), np.int64)
        for (i, j, k), c in zip(exps, coeffs):
            v = (v + (c * pw[i, s] % p) * (pw[j][:, None] * pw[k][None, :] % p)) % p
        hist += np.bincount(v.ravel(), minlength=p)
    return hist


def eigen_incidence(mats, p, n):
    a, b, c, d = (mats[:, e][:, None] for e in range(4))
    z0, z1 = np.divmod(np.arange(p * p, dtype=np.int64), p)
    z0, z1 = z0[None, :], z1[None, :]
    re = (b * ((z0 * z0 + n * z1 * z1) % p) + (a - d) * z0 - c) % p
    im = (2 * b * z0 * z1 + (a - d) * z1) % p
    E = (re == 0) & (im == 0)
    return np.concatenate([E, (b % p == 0)], axis=1)


def equivalence_counts(mats, p, n, lo, hi):
    E = eigen_incidence(mats, p, n).astype(np.int32)
    A = mats[lo:hi]
    a0, a1, a2, a3 = (A[:, e][:, None] for e in range(4))
    b0, b1, b2, b3 = (mats[:, e][None, :] for e in range(4))
    c1 = (E[lo:hi] @ E.T) > 0
    ab0, ab1 = (a0 * b0 + a1 * b2) % p, (a0 * b1 + a1 * b3) % p
    ab2, ab3 = (a2 * b0 + a3 * b2) % p, (a2 * b1 + a3 * b3) % p
    ba0, ba1 = (b0 * a0 + b1 * a2) % p, (b0 * a1 + b1 * a3) % p
    ba2, ba3 = (b2 * a0 + b3 * a2) % p, (b2 * a1 + b3 * a3) % p
    c2 = ((ab0 - ba0) * (ab3 - ba3) - (ab1 - ba1) * (ab2 - ba2)) % p == 0
    q0 = (ab0 * ba3 - ab1 * ba2) % p
    q3 = (-ab2 * ba1 + ab3 * ba0) % p
    c3 = (q0 + q3 - 2) % p == 0
    s, t, u = a0 + a3, b0 + b3, ab0 + ab3
    c4 = (s * s + t * t + u * u - s * t * u - 4) % p == 0
    agree = (c1 == c2) & (c2 == c3) & (c3 == c4)
    return np.array([c1.size, c1.sum(), c2.sum(), c3.sum(), c4.sum(), (~agree).sum()],
                    dtype=np.int64)


def word_image_codes(mats, invs, codes, p, lo, hi):
    """Codes of w(A, B) for A in mats[lo:hi] and all B, shape (hi - lo, N)."""
    n = mats.shape[0]
    k = hi - lo
    m = [np.ones((k, n), np.int64), np.zeros((k, n), np.int64),
         np.zeros((k, n), np.int64), np.ones((k, n), np.int64)]
    src = {
        0: [mats[lo:hi, e][:, None] for e in range(4)],
        1: [invs[lo:hi, e][:, None] for e in range(4)],
        2: [mats[:, e][None, :] for e in range(4)],
        3: [invs[:, e][None, :] for e in range(4)],
    }
    for c in codes:
        l0, l1, l2, l3 = src[int(c)]
        m = [(m[0] * l0 + m[1] * l2) % p, (m[0] * l1 + m[1] * l3) % p,
             (m[2] * l0 + m[3] * l2) % p, (m[2] * l1 + m[3] * l3) % p]
    return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]
