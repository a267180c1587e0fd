# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twins of the hot kernels in ``_kernels_py``.

Same contracts as the NumPy lane; long double arithmetic uses the libc
``expl``/``logl``/``floorl`` family, matching what NumPy's longdouble ufuncs
call, so classification decisions agree across backends.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport expl, fabsl, floorl, logl

cnp.import_array()

BACKEND_NAME = "compiled"


def sieve_primality(Py_ssize_t n, Py_ssize_t segment_size):
    out = np.ones(n + 1, dtype=np.uint8)
    cdef unsigned char[::1] flags = out
    cdef Py_ssize_t i, p, lo, hi, start
    for i in range(min(2, n + 1)):
        flags[i] = 0
    base = _base_primes_arr(n)
    cdef long long[::1] bp = base
    lo = 2
    while lo <= n:
        hi = lo + segment_size - 1
        if hi > n:
            hi = n
        for i in range(bp.shape[0]):
            p = bp[i]
            start = p * p
            if start < lo:
                start = ((lo + p - 1) // p) * p
            while start <= hi:
                flags[start] = 0
                start += p
        lo = hi + 1
    return out.view(np.bool_)


def sieve_spf(Py_ssize_t n, Py_ssize_t segment_size):
    out = np.zeros(n + 1, dtype=np.uint32)
    cdef unsigned int[::1] spf = out
    cdef Py_ssize_t i, p, lo, hi, start
    base = _base_primes_arr(n)
    cdef long long[::1] bp = base
    lo = 2
    while lo <= n:
        hi = lo + segment_size - 1
        if hi > n:
            hi = n
        for i in range(bp.shape[0]):
            p = bp[i]
            start = p * p
            if start < lo:
                start = ((lo + p - 1) // p) * p
            while start <= hi:
                if spf[start] == 0:
                    spf[start] = <unsigned int> p
                start += p
        for start in range(lo, hi + 1):
            if spf[start] == 0:
                spf[start] = <unsigned int> start
        lo = hi + 1
    return out


def _base_primes_arr(Py_ssize_t n):
    cdef Py_ssize_t limit = <Py_ssize_t> (n ** 0.5)
    while (limit + 1) * (limit + 1) <= n:
        limit += 1
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    cdef Py_ssize_t p
    for p in range(2, <Py_ssize_t> (limit ** 0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def omega_batch(unsigned int[::1] spf, values):
    v_arr = np.ascontiguousarray(values, dtype=np.int64)
    out = np.zeros(v_arr.shape[0], dtype=np.int64)
    cdef long long[::1] v = v_arr
    cdef long long[::1] om = out
    cdef Py_ssize_t i
    cdef long long m, p, c
    for i in range(v.shape[0]):
        m = v[i]
        c = 0
        while m > 1:
            p = spf[m]
            m //= p
            c += 1
        om[i] = c
    return out


def phase_frac(n, double alpha, long long k, double gamma, double offset):
    n_arr = np.ascontiguousarray(n, dtype=np.int64)
    out = np.empty(n_arr.shape[0], dtype=np.float64)
    cdef long long[::1] nv = n_arr
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    cdef long double coef = (<long double> alpha) * (<long double> k)
    cdef long double g = gamma, off = offset, val, fr
    for i in range(nv.shape[0]):
        val = coef * expl(g * logl(<long double> nv[i])) + off
        fr = val - floorl(val)
        if fr >= 1.0:
            fr -= 1.0
        ov[i] = <double> fr
    return out


def dio_classify(p, double alpha, double beta, double gamma, double theta,
                 bint nearest, double band_abs, double band_rel):
    p_arr = np.ascontiguousarray(p, dtype=np.int64)
    out = np.empty(p_arr.shape[0], dtype=np.int8)
    cdef long long[::1] pv = p_arr
    cdef signed char[::1] ov = out
    cdef Py_ssize_t i
    cdef long double a = alpha, b = beta, g = gamma, th = theta
    cdef long double lp, val, fr, dist, thresh, gap, band
    for i in range(pv.shape[0]):
        lp = logl(<long double> pv[i])
        val = a * expl(g * lp) + b
        fr = val - floorl(val)
        if fr >= 1.0:
            fr -= 1.0
        if nearest:
            dist = fr if fr <= 1.0 - fr else 1.0 - fr
        else:
            dist = fr
        thresh = expl(-th * lp)
        gap = dist - thresh
        band = (<long double> band_abs) + (<long double> band_rel) * fabsl(val)
        if fabsl(gap) < band:
            ov[i] = 2
        elif gap < 0:
            ov[i] = 1
        else:
            ov[i] = 0
    return out
