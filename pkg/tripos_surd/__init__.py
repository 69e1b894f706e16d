"""Tripos surd approximations.
This package derives, evaluates and rigorously error-bounds surd
approximations of k-th roots: a polynomial part A*N + B*M/N^(k-1) plus one
rational correction C*N*x/(D*M + E*N^k), with M = N^k + x. All arithmetic
is exact; irrational values are only ever held as rational enclosures.

The package is the entry point for library use; the command line lives in
cli.py.
"""

# The overall project layout is as follows:
#                       cli  >  options (voluptuous)
#                        \/
#     diagnostics  <  error_analysis  >  approximant
#                        \/                  \/
#                   series_engine  >  exact_numerics (Fraction, gmpy2)

from .approximant import (
    ConsistencyReport,
    SurdForm,
    check_next_order,
    derive,
    evaluate,
    expand,
    expand_coefficients,
)
from .error_analysis import (
    ErrorReport,
    Sign,
    Window,
    accurate_places,
    error_report,
    formula_enclosure,
    in_overestimate_window,
    overestimate_window,
    percent_bound,
    series_error_enclosure,
    true_error,
    verify_tripos,
)
from .exact_numerics import (
    DecimalString,
    Interval,
    Rational,
    nth_root_interval,
    parse_rational,
    rational_pow_interval,
    to_decimal,
)
from .series_engine import (
    SeriesTruncation,
    binomial_coefficient,
    remainder_enclosure,
    truncated_series,
)

__all__ = [
    "ConsistencyReport",
    "DecimalString",
    "ErrorReport",
    "Interval",
    "Rational",
    "SeriesTruncation",
    "Sign",
    "SurdForm",
    "Window",
    "accurate_places",
    "binomial_coefficient",
    "check_next_order",
    "derive",
    "error_report",
    "evaluate",
    "expand",
    "expand_coefficients",
    "formula_enclosure",
    "in_overestimate_window",
    "nth_root_interval",
    "overestimate_window",
    "parse_rational",
    "percent_bound",
    "rational_pow_interval",
    "remainder_enclosure",
    "series_error_enclosure",
    "to_decimal",
    "true_error",
    "truncated_series",
    "verify_tripos",
]
