"""Smooth minorant: construction, Fourier coefficients, tail control."""

import csv

import numpy as np
import pytest

import frozen_values as fv
import oracles
from diosieve.errors import DomainError
from diosieve.indicator import (
    SmoothIndicator,
    analytic_tail_bound,
    build_chi,
    eval_chi,
    eval_truncated,
    export_coeffs_csv,
    tail_bound,
    verify_coeff_bounds,
)


def test_build_domain_errors():
    with pytest.raises(DomainError):
        build_chi(0.5, 4)
    with pytest.raises(DomainError):
        build_chi(-0.1, 4)
    with pytest.raises(DomainError):
        build_chi(0.25, 0)


def test_mean_and_first_coefficient_vs_quadrature():
    chi = build_chi(0.25, 1)
    assert 0.0 < chi.mean < 0.5
    assert abs(chi.mean - fv.CHI_MEAN_QUARTER) < 1e-12
    assert abs(chi.coeff(1).real - fv.CHI_G1_QUARTER) < 1e-12
    assert chi.coeff(-1) == chi.coeff(1)  # real even kernel
    assert chi.crosscheck_error < 1e-12


def test_eval_examples():
    chi = build_chi(0.25, 4)
    assert eval_chi(chi, 0.5) == 0.0
    assert 0.0 < eval_chi(chi, 0.0) < 1.0
    assert eval_chi(chi, 7.3) == pytest.approx(eval_chi(chi, 0.3), abs=1e-12)
    assert eval_chi(chi, 0.25) == 0.0  # support boundary


def test_eval_against_independent_definition(rng):
    chi = build_chi(1 / 32, 8)
    for t in rng.uniform(-2, 2, size=50):
        assert eval_chi(chi, float(t)) == pytest.approx(
            float(oracles.chi_mp(float(t), 1 / 32)), abs=1e-15
        )


def test_minorant_property(rng):
    chi = build_chi(2.0**-5, 16)
    t = rng.uniform(0, 1, size=10**5)
    vals = eval_chi(chi, t)
    dist = np.minimum(t % 1.0, 1.0 - t % 1.0)
    indicator = (dist <= chi.delta).astype(float)
    assert np.all(vals <= indicator)
    assert np.all(vals < 1.0)
    assert np.all(vals >= 0.0)


def test_parseval_and_truncation_defect():
    chi = build_chi(2.0**-4, 64)
    nodes = 1 << 17
    t = np.arange(nodes) / nodes
    chi_sq = float((eval_chi(chi, t) ** 2).mean())
    coeff_energy = chi.mean**2 + 2.0 * float((chi.coeff_abs(1, chi.K) ** 2).sum())
    assert coeff_energy <= chi_sq + 1e-12
    assert chi_sq <= chi.mean
    defect = chi_sq - coeff_energy
    assert 0.0 <= defect <= tail_bound(chi) ** 2 + 1e-12


def test_truncated_series_accuracy(rng):
    chi = build_chi(2.0**-4, 48)
    bound = tail_bound(chi)
    t = rng.uniform(0, 1, size=10**4)
    err = np.abs(eval_chi(chi, t) - eval_truncated(chi, t))
    assert float(err.max()) <= bound + 1e-12


def test_verify_coeff_bounds_frozen():
    chi = build_chi(2.0**-6, 2**6 * 36)
    rep = verify_coeff_bounds(chi, C=2.0)
    assert rep.passed
    assert rep.cutoff_sufficient
    assert rep.max_ratio == pytest.approx(fv.COEFF_MAX_RATIO_2POW6, rel=1e-9)
    assert rep.tail_total == pytest.approx(fv.COEFF_TAIL_TOTAL_2POW6, rel=1e-6)
    assert rep.tail_total < rep.tail_limit


def test_verify_coeff_bounds_small_K():
    chi = build_chi(0.25, 1)
    rep = verify_coeff_bounds(chi, C=1.0)
    assert np.isfinite(rep.max_ratio)


def test_zero_coefficient_tail_is_zero():
    ind = SmoothIndicator(
        delta=0.25, K=4, mean=1.0, construction_id="zero-test",
        kmax=8, _g=np.zeros(9), nodes=0, crosscheck_error=0.0,
    )
    rep = verify_coeff_bounds(ind, C=1.0)
    assert rep.tail_measured == 0.0
    assert rep.max_ratio == 0.0


def test_tail_bound_requests_beyond_kmax():
    chi = build_chi(0.25, 2)
    with pytest.raises(DomainError):
        chi.coeff(100)
    with pytest.raises(DomainError):
        tail_bound(chi, K=100)


def test_analytic_tail_decreases():
    chi = build_chi(2.0**-5, 8)
    assert analytic_tail_bound(chi, 64) > analytic_tail_bound(chi, 128) > 0.0


def test_analytic_tail_dominates_measured():
    """The 4th-derivative bound must sit above the true coefficient tail."""
    from diosieve.indicator import _fft_coeffs

    for delta in (0.25, 2.0**-5, 2.0**-8):
        g = np.abs(_fft_coeffs(delta, 1 << 17, 4096))
        chi = build_chi(delta, 4)
        for cutoff in (32, 128, 512):
            measured = 2.0 * g[cutoff + 1 :].sum()
            assert measured <= analytic_tail_bound(chi, cutoff)


def test_csv_export(tmp_path):
    chi = build_chi(0.25, 3)
    path = tmp_path / "coeffs.csv"
    export_coeffs_csv(chi, str(path))
    with open(path) as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 7  # k = -3..3
    by_k = {int(r["k"]): float(r["re_g_k"]) for r in rows}
    assert by_k[0] == pytest.approx(chi.mean)
    assert by_k[2] == by_k[-2] == pytest.approx(chi.coeff(2).real)
    assert all(float(r["im_g_k"]) == 0.0 for r in rows)
