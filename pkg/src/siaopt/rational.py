"""Exact rational helpers: parsing, formatting, decimal expansion.

All quantities in this package are stored as `fractions.Fraction` (or plain
int); binary floating point is never used for model data, so equality tests
and objective comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonDecimalRational, ParseError


def to_fraction(value, where: str = "value") -> Fraction:
    """Coerce an int, Fraction, or "p/q" string into an exact Fraction.

    Floats are rejected: they carry binary rounding and would break exact
    objective comparisons downstream.
    """
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected a rational, got a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}: cannot parse rational {value!r}") from exc
    raise ParseError(f"{where}: expected int or 'p/q' string, got {type(value).__name__}")


def to_int(value, where: str = "value") -> int:
    """Coerce an integer-valued input (int or integral string) to int."""
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got a bool")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError as exc:
            raise ParseError(f"{where}: cannot parse integer {value!r}") from exc
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise ParseError(f"{where}: expected an integer, got {value!r}")


def format_fraction(value: Fraction | int) -> str:
    """Render as `p/q`, or `p` when the denominator is one."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value: Fraction | int, where: str = "coefficient") -> str:
    """Exact finite decimal expansion of a rational, e.g. 3/2 -> "1.5".

    Raises NonDecimalRational when the reduced denominator has a prime
    factor other than 2 or 5 (e.g. 1/3), since no finite expansion exists.
    """
    value = Fraction(value)
    den = value.denominator
    if den == 1:
        return str(value.numerator)
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise NonDecimalRational(
            f"{where} {format_fraction(value)} has no finite decimal expansion"
        )
    shift = max(twos, fives)
    scaled = value.numerator * 10**shift // value.denominator
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(shift + 1, "0")
    whole, frac = digits[:-shift], digits[-shift:]
    frac = frac.rstrip("0")
    if not frac:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac}"
