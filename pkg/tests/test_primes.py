"""Prime engine: tables, Omega, progression counts, logarithmic integral."""

import numpy as np
import pytest

import frozen_values as fv
import oracles
from diosieve.errors import DomainError, ResourceError
from diosieve.primes import (
    APCountQuery,
    build_table,
    is_almost_prime,
    log_integral,
    omega,
    omega_values,
    prime_count_ap,
    primes_upto,
)


def test_small_table_exhaustive():
    table = build_table(10)
    assert table.primes().tolist() == [2, 3, 5, 7]
    assert table.lo == 2 and table.hi == 10


def test_pi_1e6_matches_oracle():
    table = build_table(10**6)
    assert table.primes().size == fv.PI_1E6


def test_bad_bounds():
    with pytest.raises(DomainError):
        build_table(1)
    with pytest.raises(ResourceError):
        build_table(10**9)
    with pytest.raises(ResourceError):
        build_table(50_000_001, with_spf=True)


def test_segment_independence():
    reference = build_table(40_000, with_spf=True)
    for segment in (128, 1000, 1 << 16):
        t = build_table(40_000, with_spf=True, segment_size=segment)
        assert np.array_equal(t.primality, reference.primality)
        assert np.array_equal(t.spf, reference.spf)


def test_spf_is_32bit(table_small):
    assert table_small.spf.dtype == np.uint32


def test_omega_examples(table_small):
    assert omega(table_small, 12) == 3
    assert omega(table_small, 1024) == 10
    assert omega(table_small, 9973) == 1  # prime by trial division
    assert oracles.trial_division_is_prime(9973)
    assert omega(table_small, 1) == 0


def test_omega_requires_spf():
    table = build_table(100)
    with pytest.raises(DomainError):
        omega(table, 12)


def test_omega_out_of_range(table_small):
    with pytest.raises(DomainError):
        omega(table_small, table_small.hi + 1)


def test_omega_additive_on_products(table_small, rng):
    for _ in range(200):
        m = int(rng.integers(2, 140))
        n = int(rng.integers(2, 140))
        assert omega(table_small, m * n) == omega(table_small, m) + omega(table_small, n)


def test_primality_iff_omega_one(table_small):
    ns = np.arange(2, 5000, dtype=np.int64)
    om = omega_values(table_small, ns)
    assert np.array_equal(om == 1, table_small.primality[2:5000])


def test_almost_prime_examples(table_small):
    assert is_almost_prime(table_small, 4, 2)
    assert not is_almost_prime(table_small, 8, 2)
    assert is_almost_prime(table_small, 15, 2)  # 3*5
    with pytest.raises(DomainError):
        is_almost_prime(table_small, 0, 2)


def test_prime_count_ap_examples(table_small):
    # primes 5, 13, 17 are the residues 1 mod 4 up to 20
    assert prime_count_ap(table_small, APCountQuery(20, 4, 1)) == 3
    assert prime_count_ap(table_small, APCountQuery(10, 1, 0)) == 4


def test_prime_count_ap_oracle_value(table_1e5):
    assert prime_count_ap(table_1e5, APCountQuery(10**5, 3, 2)) == fv.PI_1E5_MOD3_RES2


def test_prime_count_ap_residue_partition(table_small):
    pi = prime_count_ap(table_small, APCountQuery(20_000, 1, 0))
    for d in range(1, 8):
        total = sum(
            prime_count_ap(table_small, APCountQuery(20_000, d, a)) for a in range(d)
        )
        assert total == pi


def test_prime_count_ap_malformed_residue(table_small):
    with pytest.raises(DomainError):
        APCountQuery(100, 4, 4)
    with pytest.raises(DomainError):
        APCountQuery(100, 4, -1)
    with pytest.raises(DomainError):
        APCountQuery(100, 0, 0)


def test_log_integral_convention_and_oracle():
    assert log_integral(2.0) == 0.0
    assert abs(log_integral(10.0) - fv.LI_10) < 1e-8 * fv.LI_10
    assert abs(log_integral(10.0**6) - fv.LI_1E6) < 1e-8 * fv.LI_1E6
    with pytest.raises(DomainError):
        log_integral(1.5)


def test_primes_upto_small():
    assert primes_upto(31).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    assert primes_upto(1.5).size == 0
