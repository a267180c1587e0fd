"""Fractional-part arithmetic and the Diophantine inequality over primes.

The central predicate is dist(alpha * p^gamma + beta) < p^(-theta), where
dist is the distance to the nearest integer (or the plain fractional part
in ``frac`` mode).  Evaluation is tiered: fast double arithmetic, a long
double re-check near the threshold, and arbitrary precision (mpmath) for
the rare cases long double cannot separate.  The tiers make the counting
functions deterministic and backend-independent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .backend import kernels
from .errors import DomainError
from .primes import PrimeTable, omega_values

# Escalation bands.  The double margin must dominate the absolute phase error
# of exp(gamma*log p) at magnitude |alpha*p^gamma|, hence the relative part.
_DOUBLE_BAND_ABS = 1e-9
_DOUBLE_BAND_REL = 1e-13
_LD_EPS = float(np.finfo(np.longdouble).eps)
_LD_BAND_ABS = 1e-15
_LD_BAND_REL = 64.0 * _LD_EPS

_MP_DPS = 60


@dataclass(frozen=True)
class DioParams:
    """Parameters of the inequality dist(alpha*p^gamma + beta) < p^(-theta)."""

    alpha: float
    beta: float
    gamma: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "theta"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if self.alpha == 0:
            raise DomainError("alpha must be nonzero")
        if not 0 < self.gamma < 1:
            raise DomainError(f"gamma must lie in (0,1), got {self.gamma}")
        if self.theta <= 0:
            raise DomainError(f"theta must be positive, got {self.theta}")


def frac_distance(x: float) -> float:
    """Distance from x to the nearest integer, in [0, 1/2]."""
    if not math.isfinite(x):
        raise DomainError(f"frac_distance needs a finite argument, got {x}")
    r = x - math.floor(x)
    return min(r, 1.0 - r)


def frac_part(x: float) -> float:
    """Fractional part {x} in [0, 1)."""
    if not math.isfinite(x):
        raise DomainError(f"frac_part needs a finite argument, got {x}")
    r = x - math.floor(x)
    return r if r < 1.0 else 0.0


def _mp_satisfies(p: int, params: DioParams, mode: str) -> bool:
    """Arbitrary-precision referee for near-threshold cases."""
    with mp.workdps(_MP_DPS):
        x = mp.mpf(params.alpha) * mp.power(p, mp.mpf(params.gamma)) + mp.mpf(params.beta)
        fr = x - mp.floor(x)
        dist = min(fr, 1 - fr) if mode == "nearest" else fr
        return dist < mp.power(p, -mp.mpf(params.theta))


def _classify_primes(parr: np.ndarray, params: DioParams, mode: str) -> np.ndarray:
    """Boolean satisfied-mask over a prime array; ambiguities settled by mpmath."""
    cls = kernels.dio_classify(
        parr,
        params.alpha,
        params.beta,
        params.gamma,
        params.theta,
        mode == "nearest",
        _LD_BAND_ABS,
        _LD_BAND_REL,
    )
    for i in np.nonzero(cls == 2)[0]:
        cls[i] = 1 if _mp_satisfies(int(parr[i]), params, mode) else 0
    return cls == 1


def satisfies_dio(p: int, params: DioParams, mode: str = "nearest") -> bool:
    """True iff dist(alpha*p^gamma + beta) < p^(-theta); strict, ties are False."""
    if p < 2:
        raise DomainError(f"prime argument must be >= 2, got {p}")
    if mode not in ("nearest", "frac"):
        raise DomainError(f"mode must be 'nearest' or 'frac', got {mode!r}")
    # double fast path
    v = params.alpha * p**params.gamma + params.beta
    fr = v - math.floor(v)
    dist = min(fr, 1.0 - fr) if mode == "nearest" else fr
    gap = dist - p**-params.theta
    if abs(gap) >= _DOUBLE_BAND_ABS + _DOUBLE_BAND_REL * abs(v):
        return gap < 0
    # slow path: long double, then mpmath if still inside the band
    cls = int(
        kernels.dio_classify(
            np.array([p], dtype=np.int64),
            params.alpha,
            params.beta,
            params.gamma,
            params.theta,
            mode == "nearest",
            _LD_BAND_ABS,
            _LD_BAND_REL,
        )[0]
    )
    if cls != 2:
        return cls == 1
    return _mp_satisfies(p, params, mode)


def count_H(
    table: PrimeTable,
    n: int,
    params: DioParams,
    r: int | None = None,
    mode: str = "nearest",
) -> int:
    """Exact count of primes p <= n satisfying the inequality with
    Omega(p+2) <= r (r=None drops the almost-prime condition)."""
    if mode not in ("nearest", "frac"):
        raise DomainError(f"mode must be 'nearest' or 'frac', got {mode!r}")
    table._check_range(n)
    if r is not None:
        if r < 1:
            raise DomainError(f"r must be >= 1, got {r}")
        table._check_range(n + 2)
    ps = table.primes(n)
    sat = _classify_primes(ps, params, mode)
    if r is None:
        return int(np.count_nonzero(sat))
    om = omega_values(table, ps + 2)
    return int(np.count_nonzero(sat & (om <= r)))


def count_H_fixed(
    table: PrimeTable,
    n: int,
    params: DioParams,
    delta: float | None = None,
    r: int | None = None,
    mode: str = "nearest",
) -> int:
    """Count with the fixed threshold dist(alpha*p^gamma + beta) < delta
    (default delta = n^-theta) instead of the per-prime p^-theta.

    Phases come from the long double kernel; ties against the fixed
    threshold are measure-zero and are not escalated further."""
    if delta is None:
        delta = float(n) ** -params.theta
    if delta <= 0:
        raise DomainError(f"threshold must be positive, got {delta}")
    table._check_range(n)
    ps = table.primes(n)
    t = kernels.phase_frac(ps, params.alpha, 1, params.gamma, params.beta)
    dist = np.minimum(t, 1.0 - t) if mode == "nearest" else t
    sat = dist < delta
    if r is None:
        return int(np.count_nonzero(sat))
    table._check_range(n + 2)
    om = omega_values(table, ps + 2)
    return int(np.count_nonzero(sat & (om <= r)))


def count_H_sieved(
    table: PrimeTable,
    n: int,
    params: DioParams,
    z: float,
    mode: str = "nearest",
) -> int:
    """Count primes p <= n satisfying the inequality with p+2 free of prime
    factors below z, i.e. gcd(p+2, prod_{q<z} q) = 1."""
    if z < 2:
        raise DomainError(f"sifting limit must be >= 2, got {z}")
    table._check_range(n)
    table._check_range(n + 2)
    spf = table._require_spf()
    ps = table.primes(n)
    sat = _classify_primes(ps, params, mode)
    coprime = spf[ps + 2].astype(np.int64) >= z
    return int(np.count_nonzero(sat & coprime))
