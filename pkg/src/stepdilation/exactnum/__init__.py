"""Exact rational/cyclotomic arithmetic and certified complex intervals."""

from .cyclo import (
    CycloNumber,
    CycloOrderError,
    cyclo_lift,
    cyclotomic_polynomial,
    gaussian,
    is_zero,
    root_of_unity,
)
from .interval import (
    ComplexInterval,
    RatInterval,
    compare_real,
    embed,
    real_interval,
    sign_of_real,
)
from .parse import CycloParseError, parse_cyclo, parse_rational

__all__ = [
    "CycloNumber",
    "CycloOrderError",
    "CycloParseError",
    "ComplexInterval",
    "RatInterval",
    "compare_real",
    "cyclo_lift",
    "cyclotomic_polynomial",
    "embed",
    "gaussian",
    "is_zero",
    "parse_cyclo",
    "parse_rational",
    "real_interval",
    "root_of_unity",
    "sign_of_real",
]
