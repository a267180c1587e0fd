"""Fractional distance and the Diophantine counting functions."""

import math

import numpy as np
import pytest

import frozen_values as fv
import oracles
from diosieve.errors import DomainError
from diosieve.fractional import (
    DioParams,
    count_H,
    count_H_fixed,
    count_H_sieved,
    frac_distance,
    frac_part,
    satisfies_dio,
)

SQRT2 = float(np.sqrt(2.0))


def test_frac_distance_examples():
    assert frac_distance(0.5) == 0.5
    assert frac_distance(1.25) == 0.25
    assert frac_distance(-0.1) == pytest.approx(0.1, abs=1e-15)
    with pytest.raises(DomainError):
        frac_distance(float("inf"))


def test_frac_distance_properties(rng):
    for x in rng.uniform(-50, 50, size=2000):
        d = frac_distance(x)
        assert 0.0 <= d <= 0.5
        assert frac_distance(-x) == pytest.approx(d, abs=1e-12)
        assert frac_distance(x + 3.0) == pytest.approx(d, abs=1e-12)
    assert 0.0 <= frac_part(-0.25) < 1.0


def test_params_validation():
    with pytest.raises(DomainError):
        DioParams(alpha=1.0, beta=0.5, gamma=1.0, theta=0.1)  # gamma must be < 1
    with pytest.raises(DomainError):
        DioParams(alpha=0.0, beta=0.0, gamma=0.5, theta=0.1)
    with pytest.raises(DomainError):
        DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=0.0)


def test_satisfies_dio_examples():
    # dist(sqrt 2) = 0.414 < 2^(-1/15.5) = 0.956
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=1 / 15.5)
    assert satisfies_dio(2, params)
    assert oracles.dio_satisfies_mp(2, 1.0, 0.0, 0.5, 1 / 15.5)
    # beta = -frac(sqrt 5) makes the argument (nearly) integral: distance ~ 0
    beta = -(math.sqrt(5.0) - math.floor(math.sqrt(5.0)))
    assert satisfies_dio(5, DioParams(alpha=1.0, beta=beta, gamma=0.5, theta=0.01))
    with pytest.raises(DomainError):
        satisfies_dio(1, params)


def test_satisfies_dio_agrees_with_mpmath(rng):
    params = DioParams(alpha=SQRT2, beta=0.3, gamma=0.7, theta=0.06)
    for p in oracles.simple_sieve(3000)[::7]:
        assert satisfies_dio(int(p), params) == oracles.dio_satisfies_mp(
            int(p), SQRT2, 0.3, 0.7, 0.06
        )


def test_satisfies_dio_near_threshold_escalation():
    """theta chosen so p^-theta lands within double rounding of the distance:
    the double band, the long double band, and the mpmath referee all fire."""
    import math

    p = 101
    dist = math.sqrt(p) - math.floor(math.sqrt(p))  # < 1/2 here
    theta = -math.log(dist) / math.log(p)
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=theta)
    assert satisfies_dio(p, params) == oracles.dio_satisfies_mp(p, 1.0, 0.0, 0.5, theta)


def test_count_h_near_threshold_escalation(table_small):
    import math

    p = 9973
    dist = math.sqrt(p) - math.floor(math.sqrt(p))
    dist = min(dist, 1 - dist)
    theta = -math.log(dist) / math.log(p)
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=theta)
    got = count_H(table_small, 10**4, params)
    expected = oracles.count_dio_oracle(10**4, 1.0, 0.0, 0.5, theta, audit_band=1e-7)
    assert got == expected


def test_frac_mode_differs_from_nearest():
    # any prime with fractional part just below 1 separates the two modes
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=0.3)
    ps = oracles.simple_sieve(5000)
    fr = np.sqrt(ps.astype(float)) % 1.0
    near_one = ps[fr > 0.9][0]
    assert satisfies_dio(int(near_one), params) != satisfies_dio(
        int(near_one), params, mode="frac"
    )


def test_count_h_tiny_oracle(table_small):
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=1 / 15.5)
    assert count_H(table_small, 10, params, r=4) == fv.COUNT_H_10_SQRT_R4


def test_count_h_all_threshold_above_half(table_small):
    # p^-theta > 1/2 for every p <= 1000 when theta < log 2 / log 1000
    params = DioParams(alpha=SQRT2, beta=0.1, gamma=0.5, theta=0.05)
    assert count_H(table_small, 1000, params) == 168  # pi(1000)


def test_count_h_matches_bruteforce(table_small):
    params = DioParams(alpha=SQRT2, beta=0.0, gamma=0.5, theta=0.049)
    got = count_H(table_small, 2000, params, r=3)
    assert got == oracles.count_dio_oracle(2000, SQRT2, 0.0, 0.5, 0.049, r=3)
    got_frac = count_H(table_small, 2000, params, r=4, mode="frac")
    assert got_frac == oracles.count_dio_oracle(2000, SQRT2, 0.0, 0.5, 0.049, r=4, mode="frac")


def test_count_h_consistency_with_scalar(table_small):
    params = DioParams(alpha=SQRT2, beta=0.2, gamma=0.6, theta=0.05)
    ps = [int(p) for p in oracles.simple_sieve(1500)]
    manual = sum(satisfies_dio(p, params) for p in ps)
    assert count_H(table_small, 1500, params) == manual


def test_count_h_monotonicity(table_small):
    params = DioParams(alpha=SQRT2, beta=0.0, gamma=0.5, theta=0.06)
    counts_n = [count_H(table_small, n, params, r=3) for n in (500, 2000, 8000)]
    assert counts_n == sorted(counts_n)
    counts_r = [count_H(table_small, 5000, params, r=r) for r in (1, 2, 4, 8)]
    assert counts_r == sorted(counts_r)
    # smaller theta means a weaker threshold, so counts cannot drop
    loose = DioParams(alpha=SQRT2, beta=0.0, gamma=0.5, theta=0.03)
    assert count_H(table_small, 5000, loose, r=3) >= count_H(table_small, 5000, params, r=3)


def test_count_h_fixed_threshold(table_small):
    params = DioParams(alpha=SQRT2, beta=0.0, gamma=0.5, theta=0.3)
    n = 5000
    delta = n**-0.3
    got = count_H_fixed(table_small, n, params)
    ps = oracles.simple_sieve(n)
    vals = SQRT2 * np.sqrt(ps.astype(np.longdouble))
    fr = vals - np.floor(vals)
    dist = np.minimum(fr, 1 - fr)
    assert got == int(np.count_nonzero(dist < delta))


def test_count_h_sieved_examples(table_small):
    params = DioParams(alpha=1.0, beta=0.0, gamma=0.5, theta=0.02)
    # z = 2: the empty product sifts nothing
    assert count_H_sieved(table_small, 100, params, 2.0) == count_H(table_small, 100, params)
    assert count_H_sieved(table_small, 100, params, 3.0) == fv.COUNT_H_SIEVED_100_Z3
    # z > N+2: p+2 < z always shares a factor with P(z), so nothing survives
    assert count_H_sieved(table_small, 100, params, 103.0) == 0
    # sqrt(N+2) < z: survival forces p+2 prime and >= z (twin pairs)
    got = count_H_sieved(table_small, 100, params, 11.0)
    twins = [p for p in oracles.simple_sieve(100)
             if oracles.trial_division_is_prime(p + 2) and p + 2 >= 11
             and oracles.dio_satisfies_mp(int(p), 1.0, 0.0, 0.5, 0.02)]
    assert got == len(twins) > 0


def test_sieved_vs_almost_prime_cross_check(table_small):
    """Independent predicates on a full enumeration: for each p both the
    Omega(p+2) <= r and the spf(p+2) >= z conditions are checked directly."""
    params = DioParams(alpha=SQRT2, beta=0.0, gamma=0.5, theta=0.02)
    z, r = 7.0, 3
    for count, kw in (
        (count_H_sieved(table_small, 500, params, z), dict(z=z)),
        (count_H(table_small, 500, params, r=r), dict(r=r)),
    ):
        assert count == oracles.count_dio_oracle(500, SQRT2, 0.0, 0.5, 0.02, **kw)
