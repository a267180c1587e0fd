"""Segmented sieving and prime-counting primitives.

A :class:`PrimeTable` covers [2, N] with a primality array and, optionally,
smallest-prime-factor (spf) data that makes Omega(n) queries cheap.  Tables
are immutable once built; all queries are read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from .backend import kernels
from .errors import DomainError, ResourceError

# Memory budgets (documented ceilings): primality is 1 byte/n, spf 4 bytes/n.
PRIMALITY_CEILING = 200_000_000
SPF_CEILING = 30_000_000

DEFAULT_SEGMENT_SIZE = 1 << 20


@dataclass
class PrimeTable:
    """Sieve output over [lo, hi] (lo is always 2).

    ``primality[n]`` indexes by the integer n itself; ``spf`` is present only
    when the table was built with factorization support.
    """

    lo: int
    hi: int
    primality: np.ndarray
    spf: np.ndarray | None
    segment_size: int
    _primes: np.ndarray | None = field(default=None, repr=False)

    def is_prime(self, n: int) -> bool:
        self._check_range(n)
        return bool(self.primality[n])

    def primes(self, upto: int | None = None) -> np.ndarray:
        """All primes in [2, upto] (default: the full table) as int64."""
        if self._primes is None:
            object.__setattr__(self, "_primes", np.nonzero(self.primality)[0].astype(np.int64))
        ps = self._primes
        if upto is None:
            return ps
        self._check_range(upto)
        return ps[: np.searchsorted(ps, upto, side="right")]

    def _check_range(self, n: int) -> None:
        if not (self.lo <= n <= self.hi):
            raise DomainError(f"n={n} outside table range [{self.lo}, {self.hi}]")

    def _require_spf(self) -> np.ndarray:
        if self.spf is None:
            raise DomainError("table was built without spf; pass with_spf=True")
        return self.spf


def build_table(
    n: int, with_spf: bool = False, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> PrimeTable:
    """Sieve [2, n]; deterministic and independent of segment_size."""
    if n < 2:
        raise DomainError(f"table upper bound must be >= 2, got {n}")
    if segment_size < 1:
        raise DomainError("segment_size must be positive")
    if n > PRIMALITY_CEILING:
        raise ResourceError(
            f"n={n} exceeds primality budget of {PRIMALITY_CEILING} (1 byte per integer)"
        )
    if with_spf and n > SPF_CEILING:
        raise ResourceError(
            f"n={n} exceeds spf budget of {SPF_CEILING} (4 bytes per integer)"
        )
    primality = kernels.sieve_primality(n, segment_size)
    spf = kernels.sieve_spf(n, segment_size) if with_spf else None
    return PrimeTable(lo=2, hi=n, primality=primality, spf=spf, segment_size=segment_size)


def omega(table: PrimeTable, n: int) -> int:
    """Omega(n): prime factors counted with multiplicity; Omega(1) = 0."""
    if n == 1:
        return 0
    table._check_range(n)
    spf = table._require_spf()
    count = 0
    m = n
    while m > 1:
        m //= int(spf[m])
        count += 1
    return count


def omega_values(table: PrimeTable, values: np.ndarray) -> np.ndarray:
    """Vectorized Omega over an int array (all entries must be in range)."""
    spf = table._require_spf()
    v = np.asarray(values, dtype=np.int64)
    if v.size and (v.min() < 1 or v.max() > table.hi):
        raise DomainError("omega_values: entries outside table range")
    return kernels.omega_batch(spf, v)


def is_almost_prime(table: PrimeTable, n: int, r: int) -> bool:
    """True iff n has at most r prime factors counted with multiplicity."""
    if n < 1:
        raise DomainError(f"almost-prime test needs n >= 1, got {n}")
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    return omega(table, n) <= r if n > 1 else True


@dataclass(frozen=True)
class APCountQuery:
    """Count primes p <= n with p = a (mod d)."""

    n: int
    d: int
    a: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise DomainError(f"modulus must be >= 1, got {self.d}")
        if not (0 <= self.a < self.d):
            raise DomainError(f"residue must satisfy 0 <= a < d, got a={self.a}, d={self.d}")


def prime_count_ap(table: PrimeTable, query: APCountQuery) -> int:
    """Exact count of primes p <= query.n in the residue class a mod d."""
    table._check_range(query.n)
    ps = table.primes(query.n)
    if query.d == 1:
        return int(ps.size)
    return int(np.count_nonzero(ps % query.d == query.a))


def log_integral(x: float) -> float:
    """Offset logarithmic integral: integral of dt/log t from 2 to x.

    The lower limit 2 avoids the singularity at t = 1 and matches the use
    against prime counts that start at the first primes.
    """
    if not np.isfinite(x) or x < 2:
        raise DomainError(f"log_integral defined for x >= 2, got {x}")
    return float(mp.li(x, offset=True))


def primes_upto(limit: float) -> np.ndarray:
    """Primes p <= limit via a throwaway sieve (for small limits)."""
    n = int(np.floor(limit))
    if n < 2:
        return np.empty(0, dtype=np.int64)
    flags = kernels.sieve_primality(n, DEFAULT_SEGMENT_SIZE)
    return np.nonzero(flags)[0].astype(np.int64)
