# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; same signatures and semantics as ``_pykernels``."""
import numpy as np

from libc.math cimport fabs, fmax


cdef double _horner(const double[:] c, double x) noexcept nogil:
    cdef Py_ssize_t k
    cdef double acc = 0.0
    for k in range(c.shape[0] - 1, -1, -1):
        acc = acc * x + c[k]
    return acc


def horner(coeffs, double x):
    cdef const double[:] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    return _horner(c, x)


def bisect_root(coeffs, double lo, double hi, double rel_width=1e-13, int max_iter=400):
    cdef const double[:] c = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef double flo, fm, mid
    cdef bint neg_lo
    cdef int it
    flo = _horner(c, lo)
    if flo == 0.0:
        return lo
    if _horner(c, hi) == 0.0:
        return hi
    neg_lo = flo < 0.0
    with nogil:
        for it in range(max_iter):
            mid = 0.5 * (lo + hi)
            if hi - lo <= rel_width * fmax(1.0, fabs(mid)):
                break
            fm = _horner(c, mid)
            if fm == 0.0:
                lo = mid
                hi = mid
                break
            if (fm < 0.0) == neg_lo:
                lo = mid
            else:
                hi = mid
    return 0.5 * (lo + hi)


cdef double _step(const double[:] xs, const double[:] vals, double x) noexcept nogil:
    # right-continuous: index of the last jump <= x
    cdef Py_ssize_t lo = 0, hi = xs.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if x < xs[mid]:
            hi = mid
        else:
            lo = mid + 1
    if lo == 0:
        return 0.0
    return vals[lo - 1]


cdef bint _sandwiched(const double[:] ax, const double[:] aF,
                      const double[:] bx, const double[:] bG,
                      double eps) noexcept nogil:
    cdef Py_ssize_t i
    for i in range(ax.shape[0]):
        if _step(bx, bG, ax[i] + eps) < aF[i] - eps:
            return False
        if _step(bx, bG, ax[i] - eps) > aF[i] + eps:
            return False
    for i in range(bx.shape[0]):
        if bG[i] < _step(ax, aF, bx[i] - eps) - eps:
            return False
        if bG[i] > _step(ax, aF, bx[i] + eps) + eps:
            return False
    return True


def levy_bisect(ax, aF, bx, bG, int iters=60, double hi=1.0):
    cdef const double[:] xa = np.ascontiguousarray(ax, dtype=np.float64)
    cdef const double[:] fa = np.ascontiguousarray(aF, dtype=np.float64)
    cdef const double[:] xb = np.ascontiguousarray(bx, dtype=np.float64)
    cdef const double[:] gb = np.ascontiguousarray(bG, dtype=np.float64)
    cdef double lo = 0.0, mid
    cdef int it
    if _sandwiched(xa, fa, xb, gb, 0.0):
        return 0.0
    with nogil:
        for it in range(iters):
            mid = 0.5 * (lo + hi)
            if _sandwiched(xa, fa, xb, gb, mid):
                hi = mid
            else:
                lo = mid
    return hi


def kolmogorov_steps(ax, aF, bx, bG):
    cdef const double[:] xa = np.ascontiguousarray(ax, dtype=np.float64)
    cdef const double[:] fa = np.ascontiguousarray(aF, dtype=np.float64)
    cdef const double[:] xb = np.ascontiguousarray(bx, dtype=np.float64)
    cdef const double[:] gb = np.ascontiguousarray(bG, dtype=np.float64)
    cdef double best = 0.0, d
    cdef Py_ssize_t i
    for i in range(xa.shape[0]):
        d = fabs(_step(xa, fa, xa[i]) - _step(xb, gb, xa[i]))
        if d > best:
            best = d
    for i in range(xb.shape[0]):
        d = fabs(_step(xa, fa, xb[i]) - _step(xb, gb, xb[i]))
        if d > best:
            best = d
    return best
