"""cycenum: weight enumerators of irreducible cyclic codes.

Finite fields with log/antilog tables, cyclotomic-coset sieving,
factorization of x**n - 1 through minimal polynomials, exact Gauss sums,
the Gauss-sum weight formula with its brute-force oracle, the MacWilliams
transform, and a classical simulation of bounded-error phase estimation
that recovers exact spectra by divisibility rounding.
"""

__version__ = "0.1.0"

from .characters import (
    GaussSumValue,
    additive_character,
    gauss_sum,
    multiplicative_character,
    order_d_character_sums,
)
from .codes import (
    CodeSpec,
    codeword_from_trace,
    factor_xn_minus_1,
    generator_matrix,
    irreducible_cyclic_code,
    minimal_polynomial,
)
from .cosets import (
    Coset,
    CosetPartition,
    coset_count_formula,
    coset_leaders,
    cosets_full,
    iter_coset_leaders,
    multiplicative_order,
)
from .field import DEFAULT_TABLE_CAP, ExtField, PrimeField, build_ext_field
from .pipeline import (
    IcqParams,
    MembershipReport,
    PipelineReport,
    digit_sum,
    epsilon_bound,
    icq_membership,
    noisy_gauss_oracle,
    run_pipeline,
    run_pipeline_trials,
    theta,
)
from .weights import (
    DEFAULT_ORACLE_CAP,
    WeightEnumerator,
    WeightSpectrum,
    macwilliams_dual,
    s_function,
    weight_spectrum_bruteforce,
    weight_spectrum_mceliece,
)

from . import errors  # noqa: F401  (re-exported as a namespace)

__all__ = [
    "__version__",
    "errors",
    "GaussSumValue", "additive_character", "gauss_sum",
    "multiplicative_character", "order_d_character_sums",
    "CodeSpec", "codeword_from_trace", "factor_xn_minus_1",
    "generator_matrix", "irreducible_cyclic_code", "minimal_polynomial",
    "Coset", "CosetPartition", "coset_count_formula", "coset_leaders",
    "cosets_full", "iter_coset_leaders", "multiplicative_order",
    "DEFAULT_TABLE_CAP", "ExtField", "PrimeField", "build_ext_field",
    "IcqParams", "MembershipReport", "PipelineReport", "digit_sum",
    "epsilon_bound", "icq_membership", "noisy_gauss_oracle",
    "run_pipeline", "run_pipeline_trials", "theta",
    "DEFAULT_ORACLE_CAP", "WeightEnumerator", "WeightSpectrum",
    "macwilliams_dual", "s_function", "weight_spectrum_bruteforce",
    "weight_spectrum_mceliece",
]
