# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Faddeeva / dispersion kernel.

Mirrors ``_kernel_py`` term for term; see that module for the formulas.
"""

import numpy as np
cimport numpy as cnp

from libc.math cimport fabs, sqrt

from ._coeffs import (
    CF_DEPTH,
    CF_RADIUS,
    SERIES,
    SERIES_RADIUS,
    SERIES_TERMS,
    SQRT_PI,
    WEIDEMAN,
    WEIDEMAN_L,
    WEIDEMAN_N,
)

cnp.import_array()

BACKEND = "cython"

cdef double _SERIES[64]
cdef double _WEID[64]
cdef int _NS = SERIES_TERMS
cdef int _NW = WEIDEMAN_N
cdef int _DEPTH = CF_DEPTH
cdef double _RS = SERIES_RADIUS
cdef double _RCF = CF_RADIUS
cdef double _SQPI = SQRT_PI
cdef double _L = WEIDEMAN_L

for _i in range(_NS):
    _SERIES[_i] = SERIES[_i]
for _i in range(_NW):
    _WEID[_i] = WEIDEMAN[_i]


cdef inline double _cabs(double complex z) nogil:
    return sqrt(z.real * z.real + z.imag * z.imag)


cdef double complex _w_series(double complex z) nogil:
    cdef double complex iz = 1j * z
    cdef double complex acc = 0
    cdef int k
    for k in range(_NS - 1, -1, -1):
        acc = acc * iz + _SERIES[k]
    return acc


cdef double complex _w_weideman(double complex z) nogil:
    cdef double complex denom = _L - 1j * z
    cdef double complex big_z = (_L + 1j * z) / denom
    cdef double complex p = 0
    cdef int k
    for k in range(_NW):
        p = p * big_z + _WEID[k]
    return 2.0 * p / (denom * denom) + (1.0 / _SQPI) / denom


cdef double complex _cf_tail(double complex z) nogil:
    cdef double complex t = 0
    cdef int k
    for k in range(_DEPTH, 0, -1):
        t = (0.5 * k) / (z - t)
    return t


cdef double _cf_tail_real(double x) nogil:
    cdef double t = 0
    cdef int k
    for k in range(_DEPTH, 0, -1):
        t = (0.5 * k) / (x - t)
    return t


cdef double complex _faddeeva(double complex z) nogil:
    cdef double r = _cabs(z)
    if r < _RS:
        return _w_series(z)
    if r < _RCF:
        return _w_weideman(z)
    return 1j / (_SQPI * (z - _cf_tail(z)))


cdef double complex _lambda0_upper(double complex z) nogil:
    cdef double r = _cabs(z)
    cdef double complex t
    if r < _RS:
        return 1.0 + 1j * _SQPI * z * _w_series(z)
    if r < _RCF:
        return 1.0 + 1j * _SQPI * z * _w_weideman(z)
    t = _cf_tail(z)
    return -t / (z - t)


cdef double _lambda0_real(double mu) nogil:
    cdef double x = fabs(mu)
    cdef double t
    if x < _RS:
        return 1.0 - _SQPI * x * _w_series(x).imag
    if x < _RCF:
        return 1.0 - _SQPI * x * _w_weideman(x).imag
    t = _cf_tail_real(x)
    return -t / (x - t)


def faddeeva(z):
    """w(z) = exp(-z^2) erfc(-iz) for Im z >= 0."""
    return _faddeeva(complex(z))


def lambda0_upper(z):
    """lambda0(z) = 1 + z Z(z) for Im z >= 0 (upper boundary value on the axis)."""
    return _lambda0_upper(complex(z))


def plasma_z_upper(z):
    """Plasma dispersion function Z(z) = i sqrt(pi) w(z) for Im z >= 0."""
    cdef double complex zz = complex(z)
    if _cabs(zz) < _RCF:
        return 1j * _SQPI * _faddeeva(zz)
    return -1.0 / (zz - _cf_tail(zz))


def dlambda0_upper(z):
    """lambda0'(z) for Im z >= 0; cancellation-free tail form for |z| >= 8."""
    cdef double complex zz = complex(z)
    cdef double complex zf, t, t1
    cdef int k
    if _cabs(zz) < _RCF:
        zf = 1j * _SQPI * _faddeeva(zz)
        return zf - 2.0 * zz * (1.0 + zz * zf)
    t = 0
    for k in range(_DEPTH, 1, -1):
        t = (0.5 * k) / (zz - t)
    t1 = 0.5 / (zz - t)
    return t / ((zz - t) * (zz - t1))


def lambda0_real(mu):
    """Principal-value part 1 - 2 mu D(mu) on the real axis."""
    return _lambda0_real(float(mu))


def lambda0_upper_array(z):
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] src
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] dst
    cdef Py_ssize_t i, n
    arr = np.ascontiguousarray(z, dtype=np.complex128)
    src = arr.reshape(-1)
    n = src.shape[0]
    dst = np.empty(n, dtype=np.complex128)
    with nogil:
        for i in range(n):
            dst[i] = _lambda0_upper(src[i])
    return dst.reshape(arr.shape)


def lambda0_real_array(mu):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] src
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dst
    cdef Py_ssize_t i, n
    arr = np.ascontiguousarray(mu, dtype=np.float64)
    src = arr.reshape(-1)
    n = src.shape[0]
    dst = np.empty(n, dtype=np.float64)
    with nogil:
        for i in range(n):
            dst[i] = _lambda0_real(src[i])
    return dst.reshape(arr.shape)
