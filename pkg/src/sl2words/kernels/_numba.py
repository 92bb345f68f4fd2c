"""Loop kernels compiled with numba."""

import numba as nb
import numpy as np


@nb.njit(cache=True, nogil=True)
def word_image_histogram(mats, invs, codes, p, lo, hi):
    n = mats.shape[0]
    hist = np.zeros(p**4, np.int64)
    for i in range(lo, hi):
        for j in range(n):
            m0, m1, m2, m3 = 1, 0, 0, 1
            for c in codes:
                if c == 0:
                    l = mats[i]
                elif c == 1:
                    l = invs[i]
                elif c == 2:
                    l = mats[j]
                else:
                    l = invs[j]
                n0 = (m0 * l[0] + m1 * l[2]) % p
                n1 = (m0 * l[1] + m1 * l[3]) % p
                n2 = (m2 * l[0] + m3 * l[2]) % p
                n3 = (m2 * l[1] + m3 * l[3]) % p
                m0, m1, m2, m3 = n0, n1, n2, n3
            hist[((m0 * p + m1) * p + m2) * p + m3] += 1
    return hist


@nb.njit(cache=True, nogil=True)
def surface_histogram(exps, coeffs, p, lo, hi):
    maxdeg = 0
    for r in range(exps.shape[0]):
        for k in range(3):
            if exps[r, k] > maxdeg:
                maxdeg = exps[r, k]
    pw = np.ones((p, maxdeg + 1), np.int64)
    for x in range(p):
        for e in range(1, maxdeg + 1):
            pw[x, e] = pw[x, e - 1] * x % p
    hist = np.zeros(p, np.int64)
    for s in range(lo, hi):
        for t in range(p):
            for u in range(p):
                v = 0
                for r in range(exps.shape[0]):
                    term = coeffs[r] * pw[s, exps[r, 0]] % p
                    term = term * pw[t, exps[r, 1]] % p
                    term = term * pw[u, exps[r, 2]] % p
                    v += term
                hist[v % p] += 1
    return hist


@nb.njit(cache=True, nogil=True)
def eigen_incidence(mats, p, n):
    # points (1 : z0 + z1*w) indexed z0*p + z1, then (0 : 1) last
    N = mats.shape[0]
    E = np.zeros((N, p * p + 1), np.bool_)
    for i in range(N):
        a, b, c, d = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
        for z0 in range(p):
            for z1 in range(p):
                re = (b * ((z0 * z0 + n * z1 * z1) % p) + (a - d) * z0 - c) % p
                im = (2 * b * z0 * z1 + (a - d) * z1) % p
                E[i, z0 * p + z1] = re == 0 and im == 0
        E[i, p * p] = b % p == 0
    return E


@nb.njit(cache=True, nogil=True)
def equivalence_counts(mats, p, n, lo, hi):
    """[pairs, #cond1, #cond2, #cond3, #cond4, #violations]"""
    E = eigen_incidence(mats, p, n)
    N = mats.shape[0]
    P = E.shape[1]
    out = np.zeros(6, np.int64)
    for i in range(lo, hi):
        a0, a1, a2, a3 = mats[i, 0], mats[i, 1], mats[i, 2], mats[i, 3]
        for j in range(N):
            b0, b1, b2, b3 = mats[j, 0], mats[j, 1], mats[j, 2], mats[j, 3]
            c1 = False
            for k in range(P):
                if E[i, k] and E[j, k]:
                    c1 = True
                    break
            ab0 = (a0 * b0 + a1 * b2) % p
            ab1 = (a0 * b1 + a1 * b3) % p
            ab2 = (a2 * b0 + a3 * b2) % p
            ab3 = (a2 * b1 + a3 * b3) % p
            ba0 = (b0 * a0 + b1 * a2) % p
            ba1 = (b0 * a1 + b1 * a3) % p
            ba2 = (b2 * a0 + b3 * a2) % p
            ba3 = (b2 * a1 + b3 * a3) % p
            c2 = ((ab0 - ba0) * (ab3 - ba3) - (ab1 - ba1) * (ab2 - ba2)) % p == 0
            # A B A^-1 B^-1 = (AB) (BA)^-1, (BA)^-1 = adj(BA)
            q0 = (ab0 * ba3 - ab1 * ba2) % p
            q3 = (-ab2 * ba1 + ab3 * ba0) % p
            c3 = (q0 + q3 - 2) % p == 0
            s = a0 + a3
            t = b0 + b3
            u = ab0 + ab3
            c4 = (s * s + t * t + u * u - s * t * u - 4) % p == 0
            out[0] += 1
            out[1] += c1
            out[2] += c2
            out[3] += c3
            out[4] += c4
            if not (c1 == c2 and c2 == c3 and c3 == c4):
                out[5] += 1
    return out
