# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle sweep objective; semantics mirror `_kernels_py`."""

from libc.math cimport NAN, exp, pow, sqrt

import numpy as np

COHERENT, SQUEEZED, NEGBIN, BINOMIAL = 0, 1, 2, 3


cdef inline double _coherent(double x, double rel) noexcept nogil:
    cdef double s = x * x * (1.0 + rel) + 0.5 * rel
    cdef double d
    if s < 0.0:
        return NAN
    d = sqrt(s) - x
    return exp(-d * d)


cdef inline double _squeezed(double x, double rel) noexcept nogil:
    cdef double z = x * x
    cdef double t = 0.5 * rel * (1.0 + z)
    cdef double nu = z + t
    cdef double den = 1.0 + t
    if den <= 0.0 or nu < 0.0:
        return NAN
    return (sqrt(den) + sqrt(z * nu)) / (1.0 + nu)


cdef inline double _negbin(double x, double rel, double mu) noexcept nogil:
    cdef double t = (rel / (2.0 * mu)) * (1.0 + (2.0 * mu - 1.0) * x)
    cdef double nu = x + t
    cdef double den = 1.0 + t
    cdef double base
    if den <= 0.0 or nu < 0.0:
        return NAN
    base = (sqrt(den) + sqrt(x * nu)) / (1.0 + nu)
    return pow(base, 2.0 * mu)


cdef inline double _binomial(double x, double rel, double m) noexcept nogil:
    cdef double pp = x * (1.0 + rel) + rel / (2.0 * m)
    cdef double base
    if pp < 0.0 or pp > 1.0:
        return NAN
    base = sqrt(x * pp) + sqrt((1.0 - x) * (1.0 - pp))
    return pow(base, m)


cdef inline double _eval(int code, double x, double rel, double hyper) noexcept nogil:
    if code == 0:
        return _coherent(x, rel)
    elif code == 1:
        return _squeezed(x, rel)
    elif code == 2:
        return _negbin(x, rel, hyper)
    return _binomial(x, rel, hyper)


def objective_grid(int code, params, double rel, double hyper=0.0):
    if code < 0 or code > 3:
        raise ValueError(f"unknown family code {code}")
    cdef double[::1] xs = np.ascontiguousarray(params, dtype=np.float64)
    out_arr = np.empty(xs.shape[0])
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, n = xs.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _eval(code, xs[i], rel, hyper)
    return out_arr


def objective_at(int code, double x, double rel, double hyper=0.0):
    if code < 0 or code > 3:
        raise ValueError(f"unknown family code {code}")
    return _eval(code, x, rel, hyper)
