"""Euclidean-algorithm toolkit: traced gcds, Bezout certificates, division
rebuilt from certificates, continued fractions, Dedekind sums, perfect
numbers, and coprime-witness window verification."""

from .cf_dynamics import (
    ContinuedFraction,
    DynamicsRun,
    QuotientSumStat,
    UnimodularMatrix,
    average_cf_length,
    cf_expand,
    cf_value,
    dynamical_run,
    yao_knuth_stat,
)
from .dedekind import dedekind_sum, reciprocity_residual, sawtooth
from .errors import (
    CertificateMismatchError,
    DomainError,
    HypothesisFailedError,
    ResourceLimitError,
)
from .euclid import (
    BezoutCertificate,
    EuclidStep,
    EuclidTrace,
    division_from_bezout,
    gcd_many,
    gcd_remainder,
    gcd_subtractive,
    lcm,
    lowest_terms,
    xgcd,
)
from .integers import (
    ExactRational,
    Factorization,
    factorize,
    lucas_lehmer,
    primes_up_to,
    rational_str,
    sigma,
    smallest_prime_factor,
)
from .propositions import (
    EuclidExtension,
    LemmaWitness,
    PerfectCertificate,
    classify_perfect,
    coprime_by_prop1,
    euclid_lemma_witness,
    euclid_prime_extension,
    perfect_from_mersenne,
    perfect_scan,
)
from .sequences import (
    GrimmAssignment,
    WReport,
    composite_runs,
    default_window_bound,
    grimm_assign,
    grimm_scan,
    non_w_max_run,
    prime_interval_equivalence,
    verify_assignment,
    w_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutCertificate",
    "CertificateMismatchError",
    "ContinuedFraction",
    "DomainError",
    "DynamicsRun",
    "EuclidExtension",
    "EuclidStep",
    "EuclidTrace",
    "ExactRational",
    "Factorization",
    "GrimmAssignment",
    "HypothesisFailedError",
    "LemmaWitness",
    "PerfectCertificate",
    "QuotientSumStat",
    "ResourceLimitError",
    "UnimodularMatrix",
    "WReport",
    "average_cf_length",
    "cf_expand",
    "cf_value",
    "classify_perfect",
    "composite_runs",
    "coprime_by_prop1",
    "dedekind_sum",
    "default_window_bound",
    "division_from_bezout",
    "dynamical_run",
    "euclid_lemma_witness",
    "euclid_prime_extension",
    "factorize",
    "gcd_many",
    "gcd_remainder",
    "gcd_subtractive",
    "grimm_assign",
    "grimm_scan",
    "lcm",
    "lowest_terms",
    "lucas_lehmer",
    "non_w_max_run",
    "perfect_from_mersenne",
    "perfect_scan",
    "prime_interval_equivalence",
    "primes_up_to",
    "rational_str",
    "reciprocity_residual",
    "sawtooth",
    "sigma",
    "smallest_prime_factor",
    "verify_assignment",
    "w_witness",
    "xgcd",
]
