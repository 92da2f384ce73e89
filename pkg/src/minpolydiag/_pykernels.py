"""Reference (pure Python + numpy) implementations of the float kernels.

``_ckernels.pyx`` mirrors every function here with identical signatures and
semantics; :mod:`minpolydiag._kernels` picks the compiled one when available.
"""

import numpy as np


def mgs_dependence(U, rank_tol, reorth=True):
    """First linearly dependent row of ``U`` by modified Gram-Schmidt.

    Rows of ``U`` are orthogonalized in order against the orthonormal set
    accepted so far (a second MGS pass when ``reorth``). The first row whose
    residual norm is ``<= rank_tol`` is dependent.

    Returns ``(k, d, residuals)`` where ``U[k] ~= sum(d[j] * U[j], j < k)``
    and ``residuals[j]`` is the residual norm of row ``j`` (length ``k + 1``).
    If every row is independent, ``k == U.shape[0]`` and ``d`` is ``None``.
    """
    U = np.asarray(U, dtype=np.complex128)
    K, L = U.shape
    Q = np.zeros((K, L), dtype=np.complex128)
    R = np.zeros((K, K), dtype=np.complex128)
    residuals = np.zeros(K)
    for j in range(K):
        v = U[j].copy()
        coef = np.zeros(j, dtype=np.complex128)
        for _ in range(2 if reorth else 1):
            for i in range(j):
                c = np.vdot(Q[i], v)
                v -= c * Q[i]
                coef[i] += c
        rn = float(np.linalg.norm(v))
        residuals[j] = rn
        if rn <= rank_tol:
            return j, back_substitute(R[:j, :j], coef), residuals[:j + 1].copy()
        Q[j] = v / rn
        R[:j, j] = coef
        R[j, j] = rn
    return K, None, residuals


def back_substitute(R, b):
    """Solve upper-triangular ``R x = b``."""
    n = b.shape[0]
    x = np.zeros(n, dtype=np.complex128)
    for i in range(n - 1, -1, -1):
        s = b[i]
        for l in range(i + 1, n):
            s -= R[i, l] * x[l]
        x[i] = s / R[i, i]
    return x


def poly_eval(c, z):
    """Evaluate ``sum(c[i] z**i)`` by Horner's rule (``c`` lowest degree first)."""
    acc = 0j
    for i in range(len(c) - 1, -1, -1):
        acc = acc * z + c[i]
    return acc


def durand_kerner(coeffs, z0, max_iter=500, tol=1e-14):
    """Weierstrass / Durand-Kerner iteration for a monic polynomial.

    ``coeffs`` holds ``c_0 .. c_{d-1}`` of ``z**d + c_{d-1} z**(d-1) + ... + c_0``.
    Updates are applied in place as they are computed (Gauss-Seidel order).
    Returns ``(roots, iterations, converged)``.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    z = np.array(z0, dtype=np.complex128)
    d = z.shape[0]
    full = np.append(c, 1.0 + 0j)
    for it in range(1, max_iter + 1):
        worst = 0.0
        for i in range(d):
            zi = z[i]
            num = poly_eval(full, zi)
            den = 1.0 + 0j
            for j in range(d):
                if j != i:
                    den *= zi - z[j]
            if den == 0:
                den = 1e-300 + 0j
            delta = num / den
            z[i] = zi - delta
            rel = abs(delta) / (1.0 + abs(z[i]))
            if rel > worst:
                worst = rel
        if worst <= tol:
            return z, it, True
    return z, max_iter, False


def poly_divmod(a, b):
    """Long division of complex polynomials, lowest degree first.

    ``b[-1]`` must be nonzero. Returns ``(q, r)`` with ``len(r) == len(b) - 1``
    (``r`` untrimmed) and ``a = q*b + r``.
    """
    a = np.array(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    na, nb = a.shape[0], b.shape[0]
    if na < nb:
        return np.zeros(0, dtype=np.complex128), a
    lead = b[nb - 1]
    q = np.zeros(na - nb + 1, dtype=np.complex128)
    for k in range(na - nb, -1, -1):
        t = a[k + nb - 1] / lead
        q[k] = t
        for j in range(nb):
            a[k + j] -= t * b[j]
    return q, a[:nb - 1].copy()
