"""diosieve: a desk-scale lab for Diophantine approximation over primes.

Exact finite-N computations around the inequality
dist(alpha p^gamma + beta) < p^-theta for primes p with p+2 almost prime:
segmented sieving, weighted exponential sums in two orderings, smooth
periodic minorants with Fourier tail control, large-sieve verification,
the linear Rosser-Iwaniec sieve, and the assembled lower-bound pipeline.
"""

from .backend import BACKEND, available_backends
from .errors import DomainError, ResourceError
from .expsum import (
    ExpSumSpec,
    ShortIntervalPlan,
    build_plan,
    coefficient_bound_check,
    compute_S_direct,
    compute_S_swapped,
    full_range_sum_dyadic,
    linearization_error,
    scaling_experiment,
)
from .fractional import (
    DioParams,
    count_H,
    count_H_fixed,
    count_H_sieved,
    frac_distance,
    frac_part,
    satisfies_dio,
)
from .indicator import (
    SmoothIndicator,
    build_chi,
    eval_chi,
    eval_truncated,
    export_coeffs_csv,
    tail_bound,
    verify_coeff_bounds,
)
from .large_sieve import (
    SpacedFrequencySet,
    frequency_set,
    linearized_frequency_set,
    lhs_ls,
    randomized_check,
    rhs_ls,
    verify_ls,
)
from .linear_sieve import (
    SieveDensity,
    SieveSequence,
    SieveWeights,
    big_V,
    build_beta_weights,
    check_fundamental,
    export_weights_csv,
    f_lower,
    F_upper,
    moebius_weights,
    phi_density,
    reciprocal_density,
    sieve_count_exact,
    sieve_lower_bound,
    v_ratio_constant,
    zero_weights,
)
from .pipeline import (
    PipelineConfig,
    PipelineError,
    PipelineReport,
    exp_remainder,
    parse_config_file,
    remainder_ap,
    remainder_scan,
    run_pipeline,
)
from .primes import (
    APCountQuery,
    PrimeTable,
    build_table,
    is_almost_prime,
    log_integral,
    omega,
    omega_values,
    prime_count_ap,
    primes_upto,
)

__version__ = "0.1.0"
