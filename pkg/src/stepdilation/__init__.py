"""Exact completeness decisions for periodic dilation systems of step functions.

The periodic dilation system of phi in L^2(0,1) is {phi(kx) : k = 1, 2, ...}
under the odd 2-periodic extension.  For step functions with rational jump
discontinuities its completeness is decidable: this package implements the
decision with exact cyclotomic arithmetic and machine-checkable
certificates, plus the catalog constructions, exhaustive scans, and a
numerical least-squares cross-check.
"""

from .decide import (
    CompletenessVerdict,
    associated_character,
    decide_completeness,
    jump_census,
    necessary_prefilters,
    theorem_polynomial,
)
from .stepfn import (
    StepFunction,
    StepFunctionError,
    indicator,
    jump,
    jump_data,
    linear_combine,
    make_step,
    minimal_denominator,
)
from .zerofree import ZeroFreeVerdict, decide_zero_free, verify_certificate

__version__ = "0.1.0"

__all__ = [
    "CompletenessVerdict",
    "StepFunction",
    "StepFunctionError",
    "ZeroFreeVerdict",
    "associated_character",
    "decide_completeness",
    "decide_zero_free",
    "indicator",
    "jump",
    "jump_census",
    "jump_data",
    "linear_combine",
    "make_step",
    "minimal_denominator",
    "necessary_prefilters",
    "theorem_polynomial",
    "verify_certificate",
]
