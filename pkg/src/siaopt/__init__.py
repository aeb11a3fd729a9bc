"""Exact optimization toolkit for service-to-interface assignment."""

from .errors import (
    DimensionMismatch,
    EmptyDimension,
    HardCapExceeded,
    InfeasibleInstance,
    IoFailure,
    MalformedProblem,
    NegativeValue,
    NonDecimalRational,
    OddSum,
    ParseError,
    SearchSpaceTooLarge,
    SiaError,
    SolverLimitHit,
    TooManyUnsolved,
)
from .instance import (
    Allocation,
    ConstraintReport,
    SiaInstance,
    Solution,
    SolveStats,
    SolveStatus,
    activation_of,
    aggregate_feasibility,
    allocation_from,
    check_constraints,
    make_solution,
    objective,
    split_count,
    validate,
    zero_allocation,
)
from .oracle import OracleResult, brute_force_solve

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
