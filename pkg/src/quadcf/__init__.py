"""Exact continued fractions of rationals, quadratic irrationals and square roots."""

from quadcf.core_cf import (
    ContinuantTable,
    FiniteCF,
    alt_representation,
    continuants,
    convergents,
    eval_cf,
    rational_cf,
)
from quadcf.errors import (
    ComplexRootError,
    InvalidSurdError,
    InvariantViolation,
    IterationLimitError,
    NotPurelyPeriodicError,
    RationalRootError,
    SquareInputError,
)
from quadcf.surd import (
    PeriodicCF,
    QuadraticPolynomial,
    QuadraticSurd,
    cf_step,
    conjugate,
    expand,
    floor_surd,
    from_polynomial,
    is_purely_periodic_by_criterion,
    isqrt,
    normalize,
    reversal_pair,
)
from quadcf.sqrtn import (
    SqrtCF,
    SqrtDecomposition,
    decompose,
    palindrome_check,
    period_length,
    reconstruct_N,
    sqrt_cf,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexRootError",
    "ContinuantTable",
    "FiniteCF",
    "InvalidSurdError",
    "InvariantViolation",
    "IterationLimitError",
    "NotPurelyPeriodicError",
    "PeriodicCF",
    "QuadraticPolynomial",
    "QuadraticSurd",
    "RationalRootError",
    "SqrtCF",
    "SqrtDecomposition",
    "SquareInputError",
    "alt_representation",
    "cf_step",
    "conjugate",
    "continuants",
    "convergents",
    "decompose",
    "eval_cf",
    "expand",
    "floor_surd",
    "from_polynomial",
    "is_purely_periodic_by_criterion",
    "isqrt",
    "normalize",
    "palindrome_check",
    "period_length",
    "rational_cf",
    "reconstruct_N",
    "reversal_pair",
    "sqrt_cf",
]
