# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops for point-process thinning and interference sums.

Same call signatures as the numpy fallback in ``_core_py``; the dispatch
lives in ``cellbounds.kernels``.
"""

from libc.math cimport INFINITY, pow


def matern_keep_mask(const double[::1] x, const double[::1] y,
                     const double[::1] age, double radius,
                     unsigned char[::1] out):
    """Matern type-II retention mask.

    A point is kept iff no point of strictly smaller age lies within
    ``radius`` of it (index breaks the measure-zero age ties).
    """
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef double r2 = radius * radius
    cdef double ai, dx, dy
    for i in range(n):
        out[i] = 1
        ai = age[i]
        for j in range(n):
            if age[j] < ai or (age[j] == ai and j < i):
                dx = x[j] - x[i]
                dy = y[j] - y[i]
                if dx * dx + dy * dy < r2:
                    out[i] = 0
                    break
    return n


def min_same_mark_sq_dist(const double[::1] x, const double[::1] y,
                          const long long[::1] marks):
    """Smallest squared distance over pairs sharing a mark; inf if no pair."""
    cdef Py_ssize_t n = x.shape[0]
    cdef Py_ssize_t i, j
    cdef double best = INFINITY
    cdef double dx, dy, d2
    for i in range(n):
        for j in range(i + 1, n):
            if marks[i] != marks[j]:
                continue
            dx = x[j] - x[i]
            dy = y[j] - y[i]
            d2 = dx * dx + dy * dy
            if d2 < best:
                best = d2
    return best


def bounded_power_law_sum(const double[::1] x, const double[::1] y,
                          double px, double py, double alpha,
                          Py_ssize_t exclude):
    """Sum of min(1, d^-alpha) over all points, skipping index ``exclude``."""
    cdef Py_ssize_t i, n = x.shape[0]
    cdef double total = 0.0
    cdef double dx, dy, d2
    for i in range(n):
        if i == exclude:
            continue
        dx = x[i] - px
        dy = y[i] - py
        d2 = dx * dx + dy * dy
        if d2 <= 1.0:
            total += 1.0
        else:
            total += pow(d2, -0.5 * alpha)
    return total
