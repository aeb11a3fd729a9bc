"""Exception hierarchy shared across the package."""


class SiaError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SiaError):
    """Input document is malformed (bad syntax, unknown field, wrong type)."""


class DimensionMismatch(SiaError):
    """A matrix or tensor does not agree with the declared counts."""


class NegativeValue(SiaError):
    """A value that must be nonnegative is negative."""


class EmptyDimension(SiaError):
    """An interface/service/resource count is zero or negative."""


class NonDecimalRational(SiaError):
    """A rational has no finite decimal expansion and cannot be exported."""


class MalformedProblem(SiaError):
    """An LP problem violates basic structural requirements."""


class HardCapExceeded(SiaError):
    """The simplex iteration cap was hit; indicates a solver bug."""


class InfeasibleInstance(SiaError):
    """No integer allocation satisfies the demand and capacity constraints."""


class SearchSpaceTooLarge(SiaError):
    """The brute-force enumeration would exceed the configured guard."""


class OddSum(SiaError):
    """A partition instance has odd total sum; no equal split can exist."""


class SolverLimitHit(SiaError):
    """The exact solver stopped on a node/time limit; the answer is unknown."""


class TooManyUnsolved(SiaError):
    """Too large a share of benchmark replications hit solver limits."""


class IoFailure(SiaError):
    """A report or model file could not be written."""
