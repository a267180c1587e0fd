"""NumPy implementations of the hot kernels.

This module is the pure-Python twin of the compiled extension
``diosieve._kernels``; both expose the same five functions with identical
semantics, and the backend module picks one at import time.  Extended
precision is provided by ``np.longdouble`` (80-bit on x86-64 Linux), which
routes through the same C ``expl``/``logl``/``floorl`` as the extension, so
the two lanes agree bit-for-bit on classification decisions.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_LD = np.longdouble


def _base_primes(limit: int) -> np.ndarray:
    """Primes up to ``limit`` inclusive by a plain sieve (small, for marking)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def sieve_primality(n: int, segment_size: int) -> np.ndarray:
    """Boolean primality array over [0, n], built segment by segment."""
    flags = np.ones(n + 1, dtype=bool)
    flags[: min(2, n + 1)] = False
    base = _base_primes(int(n**0.5))
    lo = 2
    while lo <= n:
        hi = min(lo + segment_size - 1, n)
        for p in base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start <= hi:
                flags[start : hi + 1 : p] = False
        lo = hi + 1
    return flags


def sieve_spf(n: int, segment_size: int) -> np.ndarray:
    """Smallest-prime-factor array over [0, n] (0 for n < 2, spf[p] = p)."""
    spf = np.zeros(n + 1, dtype=np.uint32)
    base = _base_primes(int(n**0.5))
    lo = 2
    while lo <= n:
        hi = min(lo + segment_size - 1, n)
        seg = spf[lo : hi + 1]
        # increasing p with write-if-unset gives the smallest factor; every
        # composite m has spf(m)^2 <= m, so starting at p*p misses nothing
        for p in base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start <= hi:
                view = seg[start - lo :: p]
                view[view == 0] = p
        unset = np.nonzero(seg == 0)[0]
        seg[unset] = (unset + lo).astype(np.uint32)
        lo = hi + 1
    if n >= 0:
        spf[0] = 0
    if n >= 1:
        spf[1] = 0
    return spf


def omega_batch(spf: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Number of prime factors with multiplicity for each value (Omega(1)=0)."""
    v = np.asarray(values, dtype=np.int64).copy()
    out = np.zeros(v.shape, dtype=np.int64)
    active = v > 1
    while active.any():
        idx = np.nonzero(active)[0]
        p = spf[v[idx]].astype(np.int64)
        v[idx] //= p
        out[idx] += 1
        active[idx] = v[idx] > 1
    return out


def phase_frac(
    n: np.ndarray, alpha: float, k: int, gamma: float, offset: float
) -> np.ndarray:
    """frac(alpha*k*n^gamma + offset) in [0,1), long double internally."""
    nl = np.asarray(n).astype(_LD)
    coef = _LD(alpha) * _LD(k)
    v = coef * np.exp(_LD(gamma) * np.log(nl)) + _LD(offset)
    fr = v - np.floor(v)
    fr = np.where(fr >= 1.0, fr - 1.0, fr)  # guard against floorl rounding
    return fr.astype(np.float64)


def dio_classify(
    p: np.ndarray,
    alpha: float,
    beta: float,
    gamma: float,
    theta: float,
    nearest: bool,
    band_abs: float,
    band_rel: float,
) -> np.ndarray:
    """Classify the inequality dist(alpha*p^gamma + beta) < p^(-theta).

    Returns int8 per prime: 1 satisfied, 0 not, 2 ambiguous at long double
    resolution (|dist - threshold| inside the escalation band); callers
    settle the 2s with arbitrary precision.
    """
    pl = np.asarray(p).astype(_LD)
    logp = np.log(pl)
    v = _LD(alpha) * np.exp(_LD(gamma) * logp) + _LD(beta)
    fr = v - np.floor(v)
    fr = np.where(fr >= 1.0, fr - 1.0, fr)
    dist = np.minimum(fr, 1.0 - fr) if nearest else fr
    thresh = np.exp(_LD(-theta) * logp)
    gap = dist - thresh
    band = _LD(band_abs) + _LD(band_rel) * np.abs(v)
    out = np.where(gap < 0, np.int8(1), np.int8(0))
    out = np.where(np.abs(gap) < band, np.int8(2), out)
    return out.astype(np.int8)
