"""Exact verification of the large sieve inequality on well-spaced points.

For frequencies x_1..x_R (reduced mod 1, pairwise wrap-distance >= delta)
and coefficients a_n over a window of M consecutive integers,

    sum_r |sum_n a_n e(x_r n)|^2  <=  (M + delta^-1) sum_n |a_n|^2.

The right side uses the modern sharp constant; a single point is given
delta = 1 by convention (no pair constraint).  The specific frequency sets
{f'_k(b_j)} from the short-interval linearization are built here as well,
with their measured spacing compared against the theoretical lower bound
|k| M gamma (1-gamma) |alpha| / (2N)^(2-gamma).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .expsum import ExpSumSpec, ShortIntervalPlan

_TWO_PI = 2.0 * np.pi
_LD = np.longdouble


@dataclass
class SpacedFrequencySet:
    points: np.ndarray        # reduced mod 1, float64
    spacing: float            # min wrap distance over distinct pairs (1.0 if < 2 points)
    has_duplicates: bool

    @property
    def size(self) -> int:
        return int(self.points.size)


def frequency_set(points) -> SpacedFrequencySet:
    """Reduce a collection of reals mod 1 and measure the minimum spacing."""
    pts = np.mod(np.asarray(points, dtype=np.float64), 1.0)
    if pts.size < 2:
        return SpacedFrequencySet(points=pts, spacing=1.0, has_duplicates=False)
    srt = np.sort(pts)
    gaps = np.diff(srt)
    wrap = srt[0] + 1.0 - srt[-1]
    dmin = float(min(gaps.min(), wrap))
    return SpacedFrequencySet(points=pts, spacing=dmin, has_duplicates=dmin == 0.0)


def lhs_ls(fset: SpacedFrequencySet, a, n_start: int = 0) -> float:
    """sum_r |sum_n a_n e(x_r n)|^2 over n = n_start+1 .. n_start+len(a)."""
    a = np.asarray(a, dtype=np.complex128)
    if not np.all(np.isfinite(a.view(np.float64))):
        raise DomainError("coefficients must be finite")
    if fset.size == 0 or a.size == 0:
        return 0.0
    n = np.arange(n_start + 1, n_start + a.size + 1, dtype=np.int64)
    nl = n.astype(_LD)
    parts = np.empty(fset.size)
    for r, x in enumerate(fset.points):
        w = _LD(x) * nl
        w = (w - np.floor(w)).astype(np.float64)
        inner = (a * (np.cos(_TWO_PI * w) + 1j * np.sin(_TWO_PI * w))).sum()
        parts[r] = abs(inner) ** 2
    return float(parts.sum())


def rhs_ls(fset: SpacedFrequencySet, a, M: int | None = None) -> float:
    """(M + spacing^-1) * sum |a_n|^2."""
    a = np.asarray(a, dtype=np.complex128)
    if M is None:
        M = int(a.size)
    if fset.spacing == 0.0:
        raise DomainError("duplicate frequencies: spacing 0 has no large-sieve constant")
    return float((M + 1.0 / fset.spacing) * (np.abs(a) ** 2).sum())


@dataclass
class LargeSieveCheck:
    lhs: float
    rhs: float
    holds: bool
    spacing: float
    n_points: int
    M: int


def verify_ls(fset: SpacedFrequencySet, a, M: int | None = None, n_start: int = 0) -> LargeSieveCheck:
    a = np.asarray(a, dtype=np.complex128)
    if M is None:
        M = int(a.size)
    lhs = lhs_ls(fset, a, n_start=n_start)
    rhs = rhs_ls(fset, a, M=M)
    return LargeSieveCheck(
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs * (1.0 + 1e-12),
        spacing=fset.spacing,
        n_points=fset.size,
        M=M,
    )


@dataclass
class FrequencySpacingReport:
    fset: SpacedFrequencySet
    k: int
    delta_min: float
    theoretical_bound: float   # |k| M gamma (1-gamma) |alpha| / (2N)^(2-gamma)
    ratio: float
    collided: bool


def linearized_frequency_set(
    spec: ExpSumSpec, plan: ShortIntervalPlan, k: int = 1
) -> FrequencySpacingReport:
    """The multiset {f'_k(b_j) mod 1} with measured vs theoretical spacing.

    Wrap-around can collide points for special alpha; that is flagged in the
    report rather than treated as an error."""
    if k == 0:
        raise DomainError("k must be nonzero (the sum excludes k = 0)")
    b = plan.boundaries.astype(_LD)
    slopes = _LD(spec.alpha) * _LD(k) * _LD(spec.gamma) * np.exp(
        _LD(spec.gamma - 1.0) * np.log(b)
    )
    fset = frequency_set((slopes - np.floor(slopes)).astype(np.float64))
    g = spec.gamma
    theo = abs(k) * plan.M * g * (1.0 - g) * abs(spec.alpha) / (2.0 * spec.N) ** (2.0 - g)
    return FrequencySpacingReport(
        fset=fset,
        k=k,
        delta_min=fset.spacing,
        theoretical_bound=theo,
        ratio=fset.spacing / theo if theo > 0 else float("inf"),
        collided=fset.has_duplicates,
    )


@dataclass
class RandomizedLSResult:
    trials: int
    violations: int
    min_slack: float   # min over trials of rhs - lhs (>= 0 iff no violation)


def randomized_check(
    trials: int, seed: int, max_points: int = 40, max_m: int = 1000
) -> RandomizedLSResult:
    """Run the inequality on random instances; it must hold on every one."""
    rng = np.random.default_rng(seed)
    violations = 0
    min_slack = float("inf")
    for _ in range(trials):
        npts = int(rng.integers(1, max_points + 1))
        m = int(rng.integers(1, max_m + 1))
        pts = np.unique(rng.random(npts))
        a = rng.normal(size=m) + 1j * rng.normal(size=m)
        chk = verify_ls(frequency_set(pts), a, M=m, n_start=int(rng.integers(0, 10**6)))
        if not chk.holds:
            violations += 1
        min_slack = min(min_slack, chk.rhs - chk.lhs)
    return RandomizedLSResult(trials=trials, violations=violations, min_slack=min_slack)
