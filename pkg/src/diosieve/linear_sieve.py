"""Linear sieve apparatus: density products, the F/f bound functions,
Rosser-Iwaniec combinatorial weights (beta = 2), and exact sifted sums.

Conventions (the source material mixes strict and non-strict cutoffs):
P(z) is the product of primes p < z, so "n coprime to P(z)" means n has no
prime factor below z; the density product V(z) multiplies over p <= z
inclusive.  Weight vectors carry values in [-1, 1], are supported on
squarefree d <= D dividing P(z), and satisfy the fundamental inequality

    sum_{d|n} lambda^-(d)  <=  [gcd(n, P(z)) = 1]  <=  sum_{d|n} lambda^+(d)

which is verified exhaustively on construction.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, ResourceError
from .primes import PrimeTable, primes_upto

EULER_GAMMA = float(np.euler_gamma)


# ---------------------------------------------------------------------------
# density
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SieveDensity:
    """Multiplicative density g supported on squarefree integers, 0 <= g(p) < 1."""

    at_prime: Callable[[int], float]
    description: str

    def on_squarefree(self, prime_factors) -> float:
        out = 1.0
        for p in prime_factors:
            out *= self.at_prime(int(p))
        return out


def phi_density() -> SieveDensity:
    """Density for sifting shifted primes by odd moduli: g(2) = 0,
    g(p) = 1/(p-1) otherwise (i.e. omega(d) = d/phi(d) on odd d)."""
    return SieveDensity(
        at_prime=lambda p: 0.0 if p == 2 else 1.0 / (p - 1),
        description="g(2)=0, g(p)=1/(p-1)",
    )


def reciprocal_density() -> SieveDensity:
    """The classical g(p) = 1/p density."""
    return SieveDensity(at_prime=lambda p: 1.0 / p, description="g(p)=1/p")


def big_V(density: SieveDensity, z: float) -> float:
    """V(z) = prod_{p <= z} (1 - g(p)); empty product (z < 2) is 1."""
    if z < 2:
        return 1.0
    out = 1.0
    for p in primes_upto(z):
        gp = density.at_prime(int(p))
        if not 0.0 <= gp < 1.0:
            raise DomainError(f"density g({p})={gp} outside [0,1)")
        out *= 1.0 - gp
    return out


def v_ratio_constant(density: SieveDensity, z_grid) -> float:
    """Measured constant K in the dimension-1 growth condition

        V(z1)/V(z2) <= (log z2/log z1) (1 + K/log z1),   z2 >= z1 >= 2,

    over all pairs of the grid (V decreases, so the ratio is taken with the
    smaller argument on top)."""
    zs = sorted(set(float(z) for z in z_grid))
    vs = [big_V(density, z) for z in zs]
    worst = 0.0
    for i, z1 in enumerate(zs):
        for j in range(i, len(zs)):
            z2 = zs[j]
            k_pair = (vs[i] / vs[j] * np.log(z1) / np.log(z2) - 1.0) * np.log(z1)
            worst = max(worst, k_pair)
    return worst


# ---------------------------------------------------------------------------
# the linear-sieve bound functions
# ---------------------------------------------------------------------------

def F_upper(s: float) -> float:
    """F(s) = 2 e^gamma_E / s on 0 < s <= 3 (gamma_E = Euler-Mascheroni)."""
    if not 0 < s <= 3:
        raise DomainError(f"F(s) defined on (0, 3], got s={s}")
    return 2.0 * np.exp(EULER_GAMMA) / s


def f_lower(s: float) -> float:
    """f(s) = 2 e^gamma_E log(s-1) / s on 2 <= s <= 4."""
    if not 2 <= s <= 4:
        raise DomainError(f"f(s) defined on [2, 4], got s={s}")
    return 2.0 * np.exp(EULER_GAMMA) * np.log(s - 1.0) / s


# ---------------------------------------------------------------------------
# weight vectors
# ---------------------------------------------------------------------------

@dataclass
class SieveWeights:
    """Finitely supported lambda(d), |lambda| <= 1, on squarefree d <= D."""

    D: int
    ds: np.ndarray           # sorted support, int64
    lams: np.ndarray         # values aligned with ds
    kind: str                # lower_beta2 | upper_beta2 | moebius | custom
    z: float                 # sifting limit used in construction (inf for moebius-by-D)
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if np.any(np.abs(self.lams) > 1.0 + 1e-12):
            raise DomainError("weight values must satisfy |lambda(d)| <= 1")
        if self.ds.size and int(self.ds.max()) > self.D:
            raise DomainError("weight support exceeds the stated level D")
        self._index = {int(d): float(v) for d, v in zip(self.ds, self.lams)}

    def value(self, d: int) -> float:
        return self._index.get(int(d), 0.0)

    @property
    def support_size(self) -> int:
        return int(self.ds.size)

    def divisor_sums(self, n_max: int) -> np.ndarray:
        """T[n] = sum_{d|n} lambda(d) for 0 <= n <= n_max (T[0] unused)."""
        t = np.zeros(n_max + 1)
        for d, v in zip(self.ds, self.lams):
            if d <= n_max:
                t[d::d] += v
        return t


def moebius_weights(D: int, z: float | None = None) -> SieveWeights:
    """lambda(d) = mu(d) on squarefree d <= D (optionally with factors < z only)."""
    if D < 1:
        raise DomainError(f"level must be >= 1, got {D}")
    sieve_primes = primes_upto(D if z is None else min(D, z - 1e-12))
    # enumerate squarefree d <= D with prime factors from sieve_primes
    ds: list[int] = []
    mus: list[int] = []
    stack = [(0, 1, 1)]
    while stack:
        start, d, sign = stack.pop()
        ds.append(d)
        mus.append(sign)
        for i in range(start, len(sieve_primes)):
            p = int(sieve_primes[i])
            if d * p > D:
                continue
            stack.append((i + 1, d * p, -sign))
    order = np.argsort(ds)
    return SieveWeights(
        D=D,
        ds=np.asarray(ds, dtype=np.int64)[order],
        lams=np.asarray(mus, dtype=np.float64)[order],
        kind="moebius",
        z=float("inf") if z is None else float(z),
    )


def zero_weights(D: int) -> SieveWeights:
    return SieveWeights(
        D=D,
        ds=np.empty(0, dtype=np.int64),
        lams=np.empty(0, dtype=np.float64),
        kind="custom",
        z=2.0,
    )


def build_beta_weights(
    z: float,
    D: int,
    side: str,
    exclude_two: bool = False,
    verify_to: int = 10_000,
    max_support: int = 2_000_000,
) -> SieveWeights:
    """Rosser-Iwaniec combinatorial weights for the linear (beta = 2) sieve.

    Support: squarefree d = p1...pr with z > p1 > ... > pr, subject to the
    cube condition p1...p_{m-1} p_m^3 <= D at every even position m for the
    lower sieve and at every odd position for the upper sieve.  Signs are
    mu(d).  ``exclude_two`` restricts the prime set to odd primes (for
    sequences where the even prime sifts nothing).
    """
    if side not in ("lower", "upper"):
        raise DomainError(f"side must be 'lower' or 'upper', got {side!r}")
    if z < 2 or D < 2:
        raise DomainError(f"need z >= 2 and D >= 2, got z={z}, D={D}")
    if z > D:
        raise DomainError(f"sifting limit z={z} exceeds level D={D}")
    ps = [int(p) for p in primes_upto(z - 1e-12)[::-1]]  # decreasing, p < z
    if exclude_two:
        ps = [p for p in ps if p != 2]
    odd_constrained = side == "upper"
    ds: list[int] = []
    lams: list[float] = []
    stack = [(0, 1, 0)]
    while stack:
        start, d, m = stack.pop()
        ds.append(d)
        lams.append(float((-1) ** m))
        if len(ds) > max_support:
            raise ResourceError(
                f"beta-weight support exceeded the cap of {max_support} entries"
            )
        for i in range(start, len(ps)):
            p = ps[i]
            m2 = m + 1
            if (m2 % 2 == 1) == odd_constrained and d * p**3 > D:
                continue
            if d * p > D:
                continue
            stack.append((i + 1, d * p, m2))
    order = np.argsort(ds)
    weights = SieveWeights(
        D=D,
        ds=np.asarray(ds, dtype=np.int64)[order],
        lams=np.asarray(lams, dtype=np.float64)[order],
        kind=f"{side}_beta2",
        z=float(z),
    )
    if verify_to:
        ok, worst_n = check_fundamental(weights, side, verify_to, exclude_two=exclude_two)
        if not ok:
            raise RuntimeError(
                f"fundamental inequality violated at n={worst_n} for {side} weights"
            )
    return weights


def coprime_indicator(z: float, n_max: int, exclude_two: bool = False) -> np.ndarray:
    """[gcd(n, P(z)) = 1] for 0 <= n <= n_max (P over p < z, optionally odd p)."""
    ind = np.ones(n_max + 1, dtype=bool)
    ind[0] = False
    for p in primes_upto(z - 1e-12):
        if exclude_two and p == 2:
            continue
        ind[p::p] = False
    return ind


def check_fundamental(
    weights: SieveWeights, side: str, n_max: int, exclude_two: bool = False
) -> tuple[bool, int | None]:
    """Exhaustively test the fundamental inequality for n = 1..n_max."""
    t = weights.divisor_sums(n_max)
    ind = coprime_indicator(weights.z, n_max, exclude_two=exclude_two).astype(np.float64)
    if side == "lower":
        bad = np.nonzero(t[1:] > ind[1:] + 1e-9)[0]
    else:
        bad = np.nonzero(t[1:] < ind[1:] - 1e-9)[0]
    if bad.size:
        return False, int(bad[0] + 1)
    return True, None


# ---------------------------------------------------------------------------
# sequences and sifted sums
# ---------------------------------------------------------------------------

@dataclass
class SieveSequence:
    """Non-negative weights f_n, n = 1..N, stored as values[n]."""

    values: np.ndarray

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.size < 2:
            raise DomainError("sequence must cover at least n = 1")
        if np.any(self.values < 0):
            raise DomainError("sequence weights must be non-negative")
        self.values[0] = 0.0

    @property
    def n_max(self) -> int:
        return int(self.values.size - 1)

    @property
    def total(self) -> float:
        return float(self.values.sum())

    def f_d(self, d: int) -> float:
        """|F_d| = sum over multiples of d."""
        return float(self.values[d::d].sum())


def sieve_count_exact(seq: SieveSequence, z: float, table: PrimeTable) -> float:
    """S(F, z): the sum of f_n over n free of prime factors below z."""
    if table.hi < seq.n_max:
        raise DomainError("table does not cover the sequence support")
    spf = table._require_spf()
    n = np.arange(seq.n_max + 1, dtype=np.int64)
    keep = (n == 1) | (spf[: seq.n_max + 1].astype(np.int64) >= z)
    keep[0] = False
    return float(seq.values[keep].sum())


@dataclass
class SieveBoundReport:
    s: float
    V: float
    f_s: float
    main: float        # X * V(z) * f(s)
    remainder: float   # sum_d lambda(d) (|F_d| - g(d) X)
    bound: float       # sum_d lambda(d) |F_d|  (true combinatorial lower bound)
    exact: float       # S(F, z)
    bound_le_exact: bool


def sieve_lower_bound(
    seq: SieveSequence,
    density: SieveDensity,
    z: float,
    D: int,
    X: float,
    table: PrimeTable,
    weights: SieveWeights | None = None,
) -> SieveBoundReport:
    """Lower-bound report: analytic main term, exact remainder, and the
    combinatorial bound checked against the exact sifted sum."""
    if X <= 0:
        raise DomainError(f"X must be positive, got {X}")
    s = float(np.log(D) / np.log(z))
    if not 2 <= s <= 4:
        raise DomainError(f"s = log D / log z = {s:.4f} outside [2, 4]")
    if weights is None:
        weights = build_beta_weights(z, D, "lower")
    v = big_V(density, z)
    fs = f_lower(s)
    main = X * v * fs
    bound = 0.0
    remainder = 0.0
    for d, lam in zip(weights.ds, weights.lams):
        fd = seq.f_d(int(d))
        gd = density.on_squarefree(_factorize_small(int(d)))
        bound += lam * fd
        remainder += lam * (fd - gd * X)
    exact = sieve_count_exact(seq, z, table)
    return SieveBoundReport(
        s=s,
        V=v,
        f_s=fs,
        main=main,
        remainder=remainder,
        bound=bound,
        exact=exact,
        bound_le_exact=bound <= exact + 1e-9 * (1.0 + abs(exact)),
    )


def _factorize_small(d: int) -> list[int]:
    """Prime factors of a squarefree d by trial division (supports are small)."""
    out = []
    m = d
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.append(m)
    return out


def export_weights_csv(weights: SieveWeights, path: str) -> None:
    """Write (d, lambda(d)) rows for the full support."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["d", "lambda"])
        for d, v in zip(weights.ds, weights.lams):
            writer.writerow([int(d), repr(float(v))])
