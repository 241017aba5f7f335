"""Exact arithmetic for Mersenne, k-Mersenne, Gaussian Mersenne numbers and
their polynomials, with checkers for their classical identities."""

from .exact import (
    GaussianDyadic,
    GaussianPolynomial,
    IntPolynomial,
    gd_arith,
    gd_normalize,
    gd_pow,
    poly_arith,
    poly_eval,
    poly_pow,
)
from .identities import (
    IdentityReport,
    RationalSeries,
    SuiteConfig,
    check_cassini,
    check_catalan_gaussian,
    check_difference,
    check_docagne_gaussian,
    check_genfunc,
    check_k_cassini,
    check_shift,
    check_two_index,
    expand_rational_series,
    run_suite,
)
from .polynomials import (
    binet_numeric_check,
    gaussian_mersenne_poly,
    k_gaussian_mersenne_poly,
    k_mersenne_poly,
    mersenne_poly,
)
from .sequences import (
    Decomposition,
    Family,
    decompose,
    gaussian_mersenne,
    gaussian_mersenne_oracle,
    k_gaussian_mersenne,
    k_mersenne,
    mersenne,
    mersenne_oracle,
    seq_stream,
    term,
)

__version__ = "0.1.0"
