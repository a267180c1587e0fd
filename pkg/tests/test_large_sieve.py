"""Large sieve inequality checks and the linearized frequency sets."""

import numpy as np
import pytest

import oracles
from diosieve.errors import DomainError
from diosieve.expsum import ExpSumSpec, a_coefficients, build_plan
from diosieve.large_sieve import (
    frequency_set,
    linearized_frequency_set,
    lhs_ls,
    randomized_check,
    rhs_ls,
    verify_ls,
)
from diosieve.linear_sieve import moebius_weights

SQRT2 = float(np.sqrt(2.0))


def test_lhs_examples():
    assert lhs_ls(frequency_set([0.37]), [1.0]) == pytest.approx(1.0)
    a = np.array([1.0, -2.0, 0.5])
    assert lhs_ls(frequency_set([0.0]), a) == pytest.approx(abs(a.sum()) ** 2)
    assert lhs_ls(frequency_set([]), a) == 0.0


def test_lhs_matches_direct_loop(rng):
    pts = rng.random(5)
    a = rng.normal(size=50) + 1j * rng.normal(size=50)
    got = lhs_ls(frequency_set(pts), a, n_start=100)
    expected = oracles.lhs_direct(pts, a, n_start=100)
    assert got == pytest.approx(expected, rel=1e-9)


def test_rhs_conventions():
    fset = frequency_set([0.2])
    assert fset.spacing == 1.0  # single point convention
    assert rhs_ls(fset, [1.0, 2.0]) == pytest.approx((2 + 1.0) * 5.0)
    assert rhs_ls(frequency_set([0.1, 0.4]), np.zeros(3)) == 0.0
    with pytest.raises(DomainError):
        rhs_ls(frequency_set([0.3, 0.3]), [1.0])


def test_wraparound_spacing():
    fset = frequency_set([0.02, 0.98])
    assert fset.spacing == pytest.approx(0.04)


def test_verify_random_instances(rng):
    res = randomized_check(500, seed=123)
    assert res.violations == 0
    assert res.min_slack >= 0.0


def test_verify_near_duplicate_points():
    fset = frequency_set([0.5, 0.5 + 1e-6])
    chk = verify_ls(fset, np.ones(20))
    assert chk.holds
    assert chk.rhs > 1e6  # spacing^-1 dominates


def test_lhs_quadratic_scaling(rng):
    pts = rng.random(8)
    a = rng.normal(size=64)
    fset = frequency_set(pts)
    assert lhs_ls(fset, 2.0 * a) == pytest.approx(4.0 * lhs_ls(fset, a), rel=1e-12)
    assert rhs_ls(fset, 2.0 * a) == pytest.approx(4.0 * rhs_ls(fset, a), rel=1e-12)


def test_lhs_monotone_in_points(rng):
    pts = rng.random(6)
    a = rng.normal(size=30)
    base = lhs_ls(frequency_set(pts), a)
    more = lhs_ls(frequency_set(np.concatenate([pts, [0.123]])), a)
    assert more >= base - 1e-12


def test_randomized_check_deterministic():
    r1 = randomized_check(50, seed=9)
    r2 = randomized_check(50, seed=9)
    assert (r1.trials, r1.violations, r1.min_slack) == (r2.trials, r2.violations, r2.min_slack)


def test_two_interval_spacing():
    spec = ExpSumSpec(alpha=SQRT2, gamma=0.5, N=1000, K=1, D=1, c=-2,
                      weights=moebius_weights(1))
    plan = build_plan(spec, M=1000)
    rep = linearized_frequency_set(spec, plan, k=1)
    gap = abs(plan.fprime_k(0, 1) - plan.fprime_k(1, 1))
    wrap = min(gap % 1.0, 1.0 - gap % 1.0)
    assert rep.delta_min == pytest.approx(wrap, rel=1e-9)


def test_linearized_set_example_ratio():
    spec = ExpSumSpec(alpha=SQRT2, gamma=0.5, N=10**4, K=3, D=10, c=-2,
                      weights=moebius_weights(10))
    plan = build_plan(spec, M=100)
    rep = linearized_frequency_set(spec, plan, k=1)
    assert not rep.collided
    assert 0.5 <= rep.ratio <= 2.0
    with pytest.raises(DomainError):
        linearized_frequency_set(spec, plan, k=0)


def test_duplicate_points_flagged_not_fatal():
    fset = frequency_set([0.25, 1.25, 0.7])  # 1.25 reduces onto 0.25
    assert fset.has_duplicates
    assert fset.spacing == 0.0


def test_linearized_set_with_weighted_prime_coefficients(table_small):
    """The proof-shaped instance: mu-weighted prime coefficients on one short
    interval against the set {f'_k(b_j)}."""
    spec = ExpSumSpec(alpha=1.0, gamma=0.5, N=10**4, K=3, D=10, c=-2,
                      weights=moebius_weights(10))
    plan = build_plan(spec, M=100)
    ns, a = a_coefficients(spec, table_small)
    window = a[: plan.M]
    for k in (1, 2, 3):
        rep = linearized_frequency_set(spec, plan, k=k)
        chk = verify_ls(rep.fset, window, M=plan.M, n_start=spec.N)
        assert chk.holds
