"""Dirac shell interaction checks: exact parameter maps, symbolic identities and
boundary-integral verification suites."""

from ._core import (  # noqa: F401
    DomainError,
    ParseError,
    algebra_suite,
    boundary_coeff_check,
    check_factorization,
    check_intertwining,
    classify,
    coro1,
    coro2,
    coro3,
    gauge_rhs,
    gauge_suite,
    jump_suite,
    numeric_suite,
    param_suite,
    rewrite_word,
    symbolic_suite,
    theta_from_lambda,
    transform,
)
