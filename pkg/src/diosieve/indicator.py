"""Smooth periodic minorant of the interval indicator 1(dist(t) < delta).

The concrete kernel is the scaled C-infinity bump

    chi(t) = c * B(w/delta),   B(u) = exp(-1/(1-u^2)) for |u| < 1, else 0,

where w is t reduced to [-1/2, 1/2) and c = e*(1 - 1e-9) normalizes the peak
strictly below 1.  Compact support gives chi = 0 outside dist(t) < delta and
the smoothness yields super-polynomial Fourier decay, so the truncation tail
beyond K = ceil(delta^-1 * log(1/delta)^C) is comfortably below 1/K.

Coefficients are computed by the trapezoid rule on a uniform grid (spectrally
accurate for smooth periodic integrands) via an FFT, cross-checked at doubled
node count.  The tail beyond the computed range is bounded analytically by
four-fold integration by parts:  |g_k| <= V4 / (2 pi k)^4 with
V4 = integral of |chi''''| over one period.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .errors import DomainError

_PEAK = float(np.e) * (1.0 - 1e-9)  # c = (sup B)^-1 * (1 - 1e-9), sup B = 1/e
_MIN_NODES = 1 << 16


def _bump(u: np.ndarray) -> np.ndarray:
    out = np.zeros_like(u, dtype=np.float64)
    m = np.abs(u) < 1.0
    um = u[m]
    out[m] = np.exp(-1.0 / (1.0 - um * um))
    return out


def _bump_abs_deriv4(u: float) -> float:
    # |B''''(u)|; the rational prefactor is d^4/du^4 of exp(-1/(1-u^2)) / B(u)
    if abs(u) >= 1.0:
        return 0.0
    w = 1.0 - u * u
    poly = 30 * u**10 + 45 * u**8 - 132 * u**6 + 58 * u**4 + 6 * u**2 - 3
    return abs(4.0 * poly / w**8) * np.exp(-1.0 / w)


@lru_cache(maxsize=1)
def _bump_deriv4_l1() -> float:
    """integral of |B''''| over (-1, 1), used in the analytic tail bound."""
    val, err = quad(_bump_abs_deriv4, -1.0, 1.0, limit=200, points=[-0.9, -0.5, 0, 0.5, 0.9])
    return val + err


@dataclass
class SmoothIndicator:
    """A built bump with its Fourier data.

    ``_g[k]`` holds the real coefficient g_k for 0 <= k <= kmax (the kernel is
    even, so g_-k = g_k and all coefficients are real); ``mean`` is g_0.
    """

    delta: float
    K: int
    mean: float
    construction_id: str
    kmax: int
    _g: np.ndarray
    nodes: int
    crosscheck_error: float

    @property
    def coeffs(self) -> dict[int, complex]:
        """Map k -> g_k for 0 < |k| <= K (interface form of the stored array)."""
        return {k: complex(self._g[abs(k)]) for k in range(-self.K, self.K + 1) if k != 0}

    def coeff(self, k: int) -> complex:
        if abs(k) > self.kmax:
            raise DomainError(f"coefficient {k} not computed (kmax={self.kmax})")
        return complex(self._g[abs(k)])

    def coeff_abs(self, lo: int, hi: int) -> np.ndarray:
        """|g_k| for k = lo..hi (positive k only)."""
        if hi > self.kmax:
            raise DomainError(f"coefficients beyond kmax={self.kmax} requested")
        return np.abs(self._g[lo : hi + 1])


def eval_chi(ind: SmoothIndicator, t) -> np.ndarray | float:
    """Closed-form evaluation of chi (not the truncated series); in [0, 1)."""
    tt = np.mod(np.asarray(t, dtype=np.float64), 1.0)
    tt = np.where(tt >= 0.5, tt - 1.0, tt)
    out = _PEAK * _bump(tt / ind.delta)
    return float(out) if np.isscalar(t) else out


def eval_truncated(ind: SmoothIndicator, t, K: int | None = None) -> np.ndarray | float:
    """mean + sum_{0<|k|<=K} g_k e(kt), using the stored real coefficients."""
    kk = ind.K if K is None else K
    if kk > ind.kmax:
        raise DomainError(f"truncation {kk} beyond computed kmax={ind.kmax}")
    tt = np.atleast_1d(np.asarray(t, dtype=np.float64))
    ks = np.arange(1, kk + 1)
    acc = ind.mean + 2.0 * (ind._g[1 : kk + 1] * np.cos(2.0 * np.pi * np.outer(tt, ks))).sum(axis=1)
    return float(acc[0]) if np.isscalar(t) else acc


def build_chi(delta: float, K: int, kmax: int | None = None) -> SmoothIndicator:
    """Construct the bump and its Fourier coefficients out to kmax (>= 2K)."""
    if not 0 < delta < 0.5:
        raise DomainError(f"delta must lie in (0, 1/2), got {delta}")
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if kmax is None:
        kmax = 2 * K
    if kmax < 2 * K:
        raise DomainError("kmax must be at least 2K for tail estimation")
    nodes = _MIN_NODES
    while nodes < 8 * kmax:
        nodes *= 2
    g = _fft_coeffs(delta, nodes, kmax)
    g2 = _fft_coeffs(delta, 2 * nodes, kmax)
    err = float(np.max(np.abs(g - g2)))
    if err > 1e-12:
        raise DomainError(f"coefficient quadrature did not converge: cross-check error {err:.2e}")
    return SmoothIndicator(
        delta=delta,
        K=K,
        mean=float(g2[0]),
        construction_id="bump_exp",
        kmax=kmax,
        _g=g2,
        nodes=2 * nodes,
        crosscheck_error=err,
    )


def _fft_coeffs(delta: float, nodes: int, kmax: int) -> np.ndarray:
    t = np.arange(nodes) / nodes
    w = np.where(t >= 0.5, t - 1.0, t)
    samples = _PEAK * _bump(w / delta)
    # rfft/nodes is exactly the trapezoid rule for int_0^1 chi(t) e(-kt) dt;
    # the imaginary parts vanish by symmetry up to roundoff
    return np.fft.rfft(samples)[: kmax + 1].real / nodes


def analytic_tail_bound(ind: SmoothIndicator, beyond: int) -> float:
    """Upper bound on sum_{|k|>beyond} |g_k| from the 4th-derivative L1 norm."""
    if beyond < 1:
        raise DomainError("tail cutoff must be >= 1")
    v4 = _PEAK * _bump_deriv4_l1() / ind.delta**3
    # sum_{k>L} k^-4 <= 1/(3 L^3); factor 2 for +-k
    return 2.0 * v4 / ((2.0 * np.pi) ** 4 * 3.0 * beyond**3)


def tail_bound(ind: SmoothIndicator, K: int | None = None) -> float:
    """Bound on sum_{|k|>K} |g_k|: measured out to kmax plus analytic beyond."""
    kk = ind.K if K is None else K
    if kk > ind.kmax:
        raise DomainError(f"tail from {kk} needs coefficients beyond kmax={ind.kmax}")
    measured = 2.0 * float(ind.coeff_abs(kk + 1, ind.kmax).sum()) if kk < ind.kmax else 0.0
    return measured + analytic_tail_bound(ind, ind.kmax)


@dataclass
class CoeffBoundReport:
    delta: float
    K: int
    C: float
    max_ratio: float          # max_{0<k<=K} |g_k| / delta
    tail_measured: float      # sum_{K<|k|<=kmax} |g_k|
    tail_analytic: float      # bound for |k| > kmax
    tail_total: float
    tail_limit: float         # 1/K
    k_required: int           # ceil(delta^-1 log(1/delta)^C)
    cutoff_sufficient: bool   # K >= k_required
    passed: bool


def verify_coeff_bounds(ind: SmoothIndicator, C: float) -> CoeffBoundReport:
    """Check |g_k| = O(delta) and the tail condition sum_{|k|>K} g_k < 1/K."""
    if ind.kmax < 2 * ind.K:
        raise DomainError("need coefficients out to 2K to estimate the tail")
    K = ind.K
    max_ratio = float(ind.coeff_abs(1, K).max()) / ind.delta
    measured = 2.0 * float(ind.coeff_abs(K + 1, ind.kmax).sum())
    analytic = analytic_tail_bound(ind, ind.kmax)
    total = measured + analytic
    k_required = int(np.ceil((1.0 / ind.delta) * np.log(1.0 / ind.delta) ** C))
    return CoeffBoundReport(
        delta=ind.delta,
        K=K,
        C=C,
        max_ratio=max_ratio,
        tail_measured=measured,
        tail_analytic=analytic,
        tail_total=total,
        tail_limit=1.0 / K,
        k_required=k_required,
        cutoff_sufficient=K >= k_required,
        passed=total < 1.0 / K,
    )


def export_coeffs_csv(ind: SmoothIndicator, path: str) -> None:
    """Write (k, Re g_k, Im g_k) for |k| <= K, k=0 row included."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "re_g_k", "im_g_k"])
        for k in range(-ind.K, ind.K + 1):
            gk = ind._g[abs(k)] if k != 0 else ind.mean
            writer.writerow([k, repr(float(gk)), repr(0.0)])
