# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled implementations of the hot kernels.

Mirrors ``_pykernels`` exactly; accumulators are C long double so the
single-pass sums match the extended-precision numpy path.
"""

from libc.math cimport INFINITY, NAN

import numpy as np

NAME = "c"


def split_point_sorted(const double[::1] xs) -> float:
    """Rightmost zero of the sample cross-over function of a sorted array."""
    cdef Py_ssize_t n = xs.shape[0]
    if n < 2:
        return NAN

    cdef long double total = 0.0
    cdef Py_ssize_t i
    for i in range(n):
        total += xs[i]

    # Walk segments right to left: the first (rightmost) one whose left-end
    # value T_n(d_k) = I_k - 2 d_k is nonnegative carries the supremum.
    cdef long double head = total
    cdef long double icpt, zero
    cdef Py_ssize_t k = n - 1
    cdef Py_ssize_t m = 0
    while k > 0:
        while k > 0 and xs[k - 1] == xs[k]:
            head -= xs[k]
            k -= 1
        if k == 0:
            break
        m += 1
        head -= xs[k]
        # head now sums xs[0..k-1]; segment is [xs[k-1], xs[k])
        icpt = head / k + (total - head) / (n - k)
        if <double> (icpt - 2.0 * xs[k - 1]) >= 0.0:
            zero = icpt / 2.0
            if <double> zero < xs[k]:
                return <double> zero
            return xs[k]
        k -= 1
    if m == 0:
        return NAN
    return -INFINITY


def segment_intercepts_sorted(object xs_in):
    """Distinct order statistics and per-segment intercepts of T_n."""
    xs_arr = np.ascontiguousarray(xs_in, dtype=np.float64)
    cdef const double[::1] xs = xs_arr
    cdef Py_ssize_t n = xs.shape[0]

    cdef long double total = 0.0
    cdef Py_ssize_t i
    for i in range(n):
        total += xs[i]

    cdef Py_ssize_t m = 1
    for i in range(1, n):
        if xs[i - 1] < xs[i]:
            m += 1

    breakpoints = np.empty(m, dtype=np.float64)
    intercepts = np.empty(m - 1 if m > 1 else 0, dtype=np.float64)
    cdef double[::1] bp = breakpoints
    cdef double[::1] ic = intercepts

    cdef long double head = 0.0
    cdef Py_ssize_t j = 0
    for i in range(n - 1):
        head += xs[i]
        if xs[i] < xs[i + 1]:
            bp[j] = xs[i]
            ic[j] = <double> (head / (i + 1) + (total - head) / (n - i - 1))
            j += 1
    bp[m - 1] = xs[n - 1]
    return breakpoints, intercepts


def bartlett_lrv(const double[::1] x, Py_ssize_t bandwidth) -> float:
    """Bartlett lag-window long-run variance of a series."""
    cdef Py_ssize_t n = x.shape[0]
    cdef long double mean = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        mean += x[i]
    mean /= n

    cdef long double gamma, acc
    acc = 0.0
    for i in range(n):
        acc += (x[i] - mean) * (x[i] - mean)
    acc /= n

    for j in range(1, bandwidth + 1):
        gamma = 0.0
        for i in range(j, n):
            gamma += (x[i] - mean) * (x[i - j] - mean)
        gamma /= n
        acc += 2.0 * (1.0 - <long double> j / (bandwidth + 1.0)) * gamma
    return <double> acc
