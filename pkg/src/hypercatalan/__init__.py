"""Exact hyper-Catalan and Geode arithmetic.

Four independent routes to the same numbers: factorial closed forms,
recurrences, exact division of truncated series, and brute-force enumeration.
"""

from .closedform import (
    fuss_catalan_power,
    fuss_number,
    geode_bitri_closed,
    geode_consecutive_closed,
    hyper_catalan,
)
from .errors import DegenerateTerm, DomainError, IntegrityError, NonTermination, NotDivisible, TruncationMismatch
from .geode import alternating_geode_eval, build_g, build_h, build_u, zero_sum_geode_eval
from .recurrence import (
    ConstantIndex,
    GeodeRecurrence,
    LargestComponent,
    geode_expand,
    geode_recurrence_value,
    hyper_catalan_recurrence,
    two_shape_alternating_sum,
    vector_partitions,
)
from .series import Method, PolySeries, Truncation, build_s, divide_by_s1, inverse, residual_geometric
from .typevec import TypeVec

__version__ = "0.1.0"

__all__ = [
    "TypeVec",
    "Truncation",
    "PolySeries",
    "Method",
    "build_s",
    "build_g",
    "build_u",
    "build_h",
    "divide_by_s1",
    "inverse",
    "residual_geometric",
    "hyper_catalan",
    "fuss_catalan_power",
    "fuss_number",
    "geode_bitri_closed",
    "geode_consecutive_closed",
    "hyper_catalan_recurrence",
    "vector_partitions",
    "GeodeRecurrence",
    "ConstantIndex",
    "LargestComponent",
    "geode_recurrence_value",
    "geode_expand",
    "two_shape_alternating_sum",
    "alternating_geode_eval",
    "zero_sum_geode_eval",
    "DomainError",
    "TruncationMismatch",
    "NotDivisible",
    "NonTermination",
    "DegenerateTerm",
    "IntegrityError",
]
