# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled float kernels. Same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

from libc.math cimport sqrt

ctypedef double complex cplx

cnp.import_array()


cdef inline double cabs2(cplx z) nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline double cabs(cplx z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


def mgs_dependence(U, double rank_tol, bint reorth=True):
    cdef cplx[:, ::1] u = np.ascontiguousarray(U, dtype=np.complex128)
    cdef Py_ssize_t K = u.shape[0], L = u.shape[1]
    q_arr = np.zeros((K, L), dtype=np.complex128)
    r_arr = np.zeros((K, K), dtype=np.complex128)
    res_arr = np.zeros(K)
    v_arr = np.zeros(L, dtype=np.complex128)
    coef_arr = np.zeros(K, dtype=np.complex128)
    cdef cplx[:, ::1] Q = q_arr
    cdef cplx[:, ::1] R = r_arr
    cdef double[::1] res = res_arr
    cdef cplx[::1] v = v_arr
    cdef cplx[::1] coef = coef_arr
    cdef Py_ssize_t i, j, l, p, npass = 2 if reorth else 1
    cdef cplx c
    cdef double rn
    for j in range(K):
        for l in range(L):
            v[l] = u[j, l]
        for i in range(j):
            coef[i] = 0
        for p in range(npass):
            for i in range(j):
                c = 0
                for l in range(L):
                    c = c + Q[i, l].conjugate() * v[l]
                for l in range(L):
                    v[l] = v[l] - c * Q[i, l]
                coef[i] = coef[i] + c
        rn = 0
        for l in range(L):
            rn += cabs2(v[l])
        rn = sqrt(rn)
        res[j] = rn
        if rn <= rank_tol:
            return j, back_substitute(r_arr[:j, :j], coef_arr[:j].copy()), res_arr[:j + 1].copy()
        for l in range(L):
            Q[j, l] = v[l] / rn
        for i in range(j):
            R[i, j] = coef[i]
        R[j, j] = rn
    return K, None, res_arr


def back_substitute(R, b):
    cdef cplx[:, :] r = np.asarray(R, dtype=np.complex128)
    cdef cplx[::1] bb = np.ascontiguousarray(b, dtype=np.complex128)
    cdef Py_ssize_t n = bb.shape[0], i, l
    x_arr = np.zeros(n, dtype=np.complex128)
    cdef cplx[::1] x = x_arr
    cdef cplx s
    for i in range(n - 1, -1, -1):
        s = bb[i]
        for l in range(i + 1, n):
            s = s - r[i, l] * x[l]
        x[i] = s / r[i, i]
    return x_arr


cdef inline cplx _horner(cplx[::1] c, Py_ssize_t n, cplx z) nogil:
    cdef cplx acc = 0
    cdef Py_ssize_t i
    for i in range(n - 1, -1, -1):
        acc = acc * z + c[i]
    return acc


def poly_eval(c, z):
    cdef cplx[::1] cc = np.ascontiguousarray(c, dtype=np.complex128)
    return complex(_horner(cc, cc.shape[0], z))


def durand_kerner(coeffs, z0, int max_iter=500, double tol=1e-14):
    full_arr = np.append(np.asarray(coeffs, dtype=np.complex128), 1.0 + 0j)
    z_arr = np.array(z0, dtype=np.complex128)
    cdef cplx[::1] full = full_arr
    cdef cplx[::1] z = z_arr
    cdef Py_ssize_t d = z.shape[0], nf = full.shape[0], i, j
    cdef int it
    cdef cplx zi, num, den, delta
    cdef double worst, rel
    for it in range(1, max_iter + 1):
        worst = 0
        for i in range(d):
            zi = z[i]
            num = _horner(full, nf, zi)
            den = 1
            for j in range(d):
                if j != i:
                    den = den * (zi - z[j])
            if den == 0:
                den = 1e-300
            delta = num / den
            z[i] = zi - delta
            rel = cabs(delta) / (1.0 + cabs(z[i]))
            if rel > worst:
                worst = rel
        if worst <= tol:
            return z_arr, it, True
    return z_arr, max_iter, False


def poly_divmod(a, b):
    a_arr = np.array(a, dtype=np.complex128)
    cdef cplx[::1] aa = a_arr
    cdef cplx[::1] bb = np.ascontiguousarray(b, dtype=np.complex128)
    cdef Py_ssize_t na = aa.shape[0], nb = bb.shape[0], k, j
    if na < nb:
        return np.zeros(0, dtype=np.complex128), a_arr
    q_arr = np.zeros(na - nb + 1, dtype=np.complex128)
    cdef cplx[::1] q = q_arr
    cdef cplx lead = bb[nb - 1], t
    for k in range(na - nb, -1, -1):
        t = aa[k + nb - 1] / lead
        q[k] = t
        for j in range(nb):
            aa[k + j] = aa[k + j] - t * bb[j]
    return q_arr, a_arr[:nb - 1].copy()
