"""Weighted oscillatory sums over primes in dyadic windows.

The object of study is the triple sum

    S = sum_{d <= D} lambda(d) sum_{0<|k|<=K} sum_{n in [N,2N], n = c (d)}
        b_n e(alpha k n^gamma),

with b_n the prime indicator (or 1 in "all" mode) and |lambda(d)| <= 1.
Both summation orderings are implemented: the d-outer form above and the
swapped form driven by the divisor-accumulated coefficients
a_n = sum_{d | n-c, d <= D} lambda(d).  Agreement of the two (a pure
reassociation) is the module's master self-check.

Phase arguments alpha*k*n^gamma are reduced mod 1 in long double before any
trigonometry; partial sums are combined in a fixed order (NumPy pairwise
summation over stacked partials) so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import DomainError
from .linear_sieve import SieveWeights
from .primes import PrimeTable

_TWO_PI = 2.0 * np.pi
_LD = np.longdouble


@dataclass
class ExpSumSpec:
    """Parameter pack for S(N, K, D, gamma)."""

    alpha: float
    gamma: float
    N: int
    K: int
    D: int
    c: int
    weights: SieveWeights
    support: str = "primes"  # "primes" (b_n) or "all"

    def __post_init__(self) -> None:
        if self.alpha == 0 or not np.isfinite(self.alpha):
            raise DomainError("alpha must be finite and nonzero")
        if not 0 < self.gamma < 1:
            raise DomainError(f"gamma must lie in (0,1), got {self.gamma}")
        if self.N < 1 or self.K < 1 or self.D < 1:
            raise DomainError("N, K, D must all be >= 1")
        if self.support not in ("primes", "all"):
            raise DomainError(f"support must be 'primes' or 'all', got {self.support!r}")
        if np.any(np.abs(self.weights.lams) > 1.0 + 1e-12):
            raise DomainError("exp-sum weights must satisfy |lambda(d)| <= 1")

    def window(self) -> np.ndarray:
        """n in [N, 2N], inclusive both ends."""
        return np.arange(self.N, 2 * self.N + 1, dtype=np.int64)


def unit_phases(n: np.ndarray, alpha: float, k: int, gamma: float) -> np.ndarray:
    """e(alpha*k*n^gamma) with long double argument reduction."""
    w = kernels.phase_frac(n, alpha, k, gamma, 0.0)
    return np.cos(_TWO_PI * w) + 1j * np.sin(_TWO_PI * w)


def _support_mask(spec: ExpSumSpec, ns: np.ndarray, table: PrimeTable) -> np.ndarray:
    if spec.support == "all":
        return np.ones(ns.size, dtype=bool)
    if table.hi < 2 * spec.N:
        raise DomainError("table does not cover [N, 2N]")
    return table.primality[ns]


def a_coefficients(spec: ExpSumSpec, table: PrimeTable) -> tuple[np.ndarray, np.ndarray]:
    """(ns, a_n) over the window: divisor-accumulated weights on the support."""
    ns = spec.window()
    a = np.zeros(ns.size)
    for d, lam in zip(spec.weights.ds, spec.weights.lams):
        d = int(d)
        if d > spec.D:
            continue
        start = (spec.c - spec.N) % d  # first n >= N with n = c (mod d)
        a[start::d] += lam
    a[~_support_mask(spec, ns, table)] = 0.0
    return ns, a


def compute_S_direct(spec: ExpSumSpec, table: PrimeTable) -> complex:
    """The d-outer triple sum, exactly as defined."""
    ns = spec.window()
    keep = _support_mask(spec, ns, table)
    partials = []
    for d, lam in zip(spec.weights.ds, spec.weights.lams):
        d = int(d)
        if d > spec.D:
            continue
        start = (spec.c - spec.N) % d
        sel = np.zeros(ns.size, dtype=bool)
        sel[start::d] = True
        sel &= keep
        nd = ns[sel]
        if nd.size == 0:
            continue
        for k in range(-spec.K, spec.K + 1):
            if k == 0:
                continue
            partials.append(lam * unit_phases(nd, spec.alpha, k, spec.gamma).sum())
    if not partials:
        return 0j
    return complex(np.sum(np.asarray(partials, dtype=np.complex128)))


def compute_S_swapped(spec: ExpSumSpec, table: PrimeTable) -> complex:
    """The k-outer form over a_n; equal to the direct form up to reassociation."""
    ns, a = a_coefficients(spec, table)
    active = a != 0.0
    na, aa = ns[active], a[active]
    if na.size == 0:
        return 0j
    partials = []
    for k in range(-spec.K, spec.K + 1):
        if k == 0:
            continue
        partials.append((aa * unit_phases(na, spec.alpha, k, spec.gamma)).sum())
    return complex(np.sum(np.asarray(partials, dtype=np.complex128)))


@dataclass
class CoeffCheckReport:
    max_ratio: float
    worst_n: int
    all_bounded: bool


def coefficient_bound_check(spec: ExpSumSpec, table: PrimeTable) -> CoeffCheckReport:
    """Verify |a_n| <= tau(n - c) across the window (tau via spf factorization)."""
    ns, a = a_coefficients(spec, table)
    spf = table._require_spf()
    max_ratio, worst = 0.0, int(ns[0])
    for n, an in zip(ns, a):
        if an == 0.0:
            continue
        m = int(n) - spec.c
        if m < 1 or m > table.hi:
            raise DomainError(f"n - c = {m} outside the factorization table")
        ratio = abs(an) / _tau(m, spf)
        if ratio > max_ratio:
            max_ratio, worst = ratio, int(n)
    return CoeffCheckReport(max_ratio=max_ratio, worst_n=worst, all_bounded=max_ratio <= 1.0 + 1e-12)


def _tau(m: int, spf: np.ndarray) -> int:
    t = 1
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        t *= e + 1
    return t


# ---------------------------------------------------------------------------
# short-interval linearization
# ---------------------------------------------------------------------------

@dataclass
class ShortIntervalPlan:
    """Tiling of [N, 2N] by intervals [b_j, b_j + M) with linearized phases."""

    N: int
    M: int
    alpha: float
    gamma: float
    boundaries: np.ndarray   # b_j = N + (j-1) M, j = 1..floor(N/M)+1
    phase_at_b: np.ndarray   # f_1(b_j) = alpha * b_j^gamma
    slope_at_b: np.ndarray   # f'_1(b_j) = alpha * gamma * b_j^(gamma-1)
    overshoot: int           # (b_last + M - 1) - 2N, always in [0, M)

    @property
    def intervals(self) -> int:
        return int(self.boundaries.size)

    def f_k(self, j: int, k: int) -> float:
        return k * float(self.phase_at_b[j])

    def fprime_k(self, j: int, k: int) -> float:
        return k * float(self.slope_at_b[j])


def default_interval_length(N: int, gamma: float) -> int:
    """M matched to the balance point N^(1 - 3 gamma / 5)."""
    return max(1, round(N ** (1.0 - 3.0 * gamma / 5.0)))


def build_plan(spec: ExpSumSpec, M: int = 0) -> ShortIntervalPlan:
    if M == 0:
        M = default_interval_length(spec.N, spec.gamma)
    if not 1 <= M <= spec.N:
        raise DomainError(f"interval length must satisfy 1 <= M <= N, got M={M}")
    j = np.arange(spec.N // M + 1, dtype=np.int64)
    b = spec.N + j * M
    bl = b.astype(_LD)
    phase = _LD(spec.alpha) * np.exp(_LD(spec.gamma) * np.log(bl))
    slope = _LD(spec.alpha) * _LD(spec.gamma) * np.exp(_LD(spec.gamma - 1.0) * np.log(bl))
    return ShortIntervalPlan(
        N=spec.N,
        M=M,
        alpha=spec.alpha,
        gamma=spec.gamma,
        boundaries=b,
        phase_at_b=phase.astype(np.float64),
        slope_at_b=slope.astype(np.float64),
        overshoot=int(b[-1] + M - 1 - 2 * spec.N),
    )


@dataclass
class LinearizationReport:
    max_value_ratio: float   # max |f_k(b_j+x) - g_jk(x)| / (|k| M^2 / N^(2-gamma))
    max_slope_ratio: float   # max |f'_k(b_j+x) - f'_k(b_j)| / (|k| M / N^(2-gamma))
    value_constant: float    # |alpha| gamma (1-gamma) / 2, the Taylor constant
    slope_constant: float    # |alpha| gamma (1-gamma)


def linearization_error(
    spec: ExpSumSpec, plan: ShortIntervalPlan, j_samples: int = 48
) -> LinearizationReport:
    """Scan x in [0, M) on a sample of intervals and compare against the
    linear approximation g_jk(x) = f_k(b_j) + x f'_k(b_j)."""
    g, al = _LD(spec.gamma), _LD(spec.alpha)
    x = np.arange(plan.M, dtype=np.int64)
    js = np.unique(np.linspace(0, plan.intervals - 1, min(j_samples, plan.intervals)).astype(int))
    max_v, max_s = _LD(0), _LD(0)
    for j in js:
        b = int(plan.boundaries[j])
        pts = (b + x).astype(_LD)
        fv = al * np.exp(g * np.log(pts))
        fpv = al * g * np.exp((g - 1) * np.log(pts))
        bl = _LD(b)
        f_b = al * np.exp(g * np.log(bl))
        fp_b = al * g * np.exp((g - 1) * np.log(bl))
        max_v = max(max_v, np.max(np.abs(fv - (f_b + x.astype(_LD) * fp_b))))
        max_s = max(max_s, np.max(np.abs(fpv - fp_b)))
    # k scales both gaps and both normalizers linearly, so k = 1 is extremal
    nv = _LD(plan.M) ** 2 / _LD(spec.N) ** (2 - g)
    nsl = _LD(plan.M) / _LD(spec.N) ** (2 - g)
    gam = spec.gamma
    return LinearizationReport(
        max_value_ratio=float(max_v / nv),
        max_slope_ratio=float(max_s / nsl),
        value_constant=abs(spec.alpha) * gam * (1 - gam) / 2.0,
        slope_constant=abs(spec.alpha) * gam * (1 - gam),
    )


# ---------------------------------------------------------------------------
# scaling experiments
# ---------------------------------------------------------------------------

@dataclass
class ScalingRow:
    alpha: float
    gamma: float
    K: int
    D: int
    N: int
    S_re: float
    S_im: float
    abs_S: float
    bound: float     # K^2 N^(1 - gamma/5)
    ratio: float     # abs_S / bound


@dataclass
class ScalingReport:
    rows: list[ScalingRow]
    slope: float | None   # least-squares slope of log|S| vs log N (None if degenerate)
    weights_kind: str
    full_range: bool = False   # rows sum n in [1, N] via dyadic blocks

    def to_records(self) -> list[dict]:
        recs = []
        for r in self.rows:
            rec = vars(r).copy()
            rec["slope"] = self.slope
            recs.append(rec)
        return recs


def scaling_experiment(
    alpha: float,
    gamma: float,
    n_list,
    K: int,
    weights_for_n,
    table: PrimeTable,
    c: int = -2,
    support: str = "primes",
    full_range: bool = False,
) -> ScalingReport:
    """Evaluate |S| across an increasing N grid against K^2 N^(1-gamma/5).

    ``weights_for_n`` maps N to the SieveWeights used at that size (the level
    D may grow with N, e.g. D = N^(1/3)).  With ``full_range`` the sum runs
    over n in [1, N], assembled from O(log N) dyadic blocks; the same bound
    shape applies with a larger epsilon absorbed by the log-many blocks."""
    n_list = [int(n) for n in n_list]
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise DomainError("N grid must be strictly increasing")
    rows = []
    kind = None
    for n in n_list:
        w = weights_for_n(n)
        kind = w.kind
        spec = ExpSumSpec(alpha=alpha, gamma=gamma, N=n, K=K, D=w.D, c=c, weights=w, support=support)
        if full_range:
            s = full_range_sum_dyadic(alpha, gamma, n, K, w, table, c=c, support=support)
        else:
            s = compute_S_swapped(spec, table)
        bound = K * K * n ** (1.0 - gamma / 5.0)
        rows.append(
            ScalingRow(
                alpha=alpha, gamma=gamma, K=K, D=w.D, N=n,
                S_re=s.real, S_im=s.imag, abs_S=abs(s),
                bound=bound, ratio=abs(s) / bound,
            )
        )
    xs = np.log([r.N for r in rows if r.abs_S > 0])
    ys = np.log([r.abs_S for r in rows if r.abs_S > 0])
    slope = float(np.polyfit(xs, ys, 1)[0]) if xs.size >= 2 else None
    return ScalingReport(rows=rows, slope=slope, weights_kind=kind or "custom",
                         full_range=full_range)


def full_range_sum_dyadic(
    alpha: float, gamma: float, N: int, K: int, weights: SieveWeights,
    table: PrimeTable, c: int = -2, support: str = "primes",
) -> complex:
    """sum_{0<|k|<=K} sum_{1<=n<=N} a_n e(alpha k n^gamma), assembled from
    O(log N) dyadic blocks (hi, hi/2] walking down from N."""
    total = []
    hi = N
    while hi >= 1:
        lo = hi // 2 + 1
        total.append(_block_sum(alpha, gamma, lo, hi, K, weights, table, c, support))
        hi = lo - 1
    return complex(np.sum(np.asarray(total, dtype=np.complex128)))


def _block_sum(alpha, gamma, lo, hi, K, weights, table, c, support) -> complex:
    ns = np.arange(lo, hi + 1, dtype=np.int64)
    a = np.zeros(ns.size)
    for d, lam in zip(weights.ds, weights.lams):
        d = int(d)
        start = (c - lo) % d
        a[start::d] += lam
    if support == "primes":
        keep = np.zeros(ns.size, dtype=bool)
        sel = ns[ns >= 2]
        keep[ns >= 2] = table.primality[sel]
        a[~keep] = 0.0
    active = a != 0.0
    na, aa = ns[active], a[active]
    if na.size == 0:
        return 0j
    partials = []
    for k in range(-K, K + 1):
        if k == 0:
            continue
        partials.append((aa * unit_phases(na, alpha, k, gamma)).sum())
    return complex(np.sum(np.asarray(partials, dtype=np.complex128)))
