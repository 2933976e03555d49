"""Exact integer and rational arithmetic, plus binomial coefficients.

Python integers are already arbitrary precision and ``fractions.Fraction``
keeps every value reduced with a positive denominator, so this module mostly
pins down the conventions the rest of the package relies on: values are
immutable, equality is structural equality of reduced forms, and the wire
format always writes an explicit denominator (``-691/2730``, ``1/1``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb

__all__ = [
    "BigInt",
    "ExactRational",
    "binomial",
    "format_rational",
    "format_rational_latex",
    "parse_rational",
    "rational_add",
    "rational_div",
    "rational_mul",
    "rational_neg",
    "rational_new",
]

# Semantic aliases: any magnitude, no precision loss.
BigInt = int
ExactRational = Fraction

_RATIONAL_RE = re.compile(r"^(-?\d+)/(\d+)$")


def rational_new(num: int, den: int) -> Fraction:
    """Reduced, sign-normalized fraction num/den.

    >>> rational_new(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def rational_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rational_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rational_neg(a: Fraction) -> Fraction:
    return -a


def rational_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return a / b


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when k > n.

    Allowing k > n (instead of raising) keeps binomial-weighted summation
    loops free of edge-case guards.
    """
    return comb(n, k)


def format_rational(value: Fraction) -> str:
    """Serialize as ``<num>/<den>`` with the denominator always explicit."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``<num>/<den>``; only the canonical reduced form is accepted."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = int(match.group(1)), int(match.group(2))
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(num, den)
    if (value.numerator, value.denominator) != (num, den):
        raise ValueError(f"rational literal not in reduced form: {text!r}")
    return value


def format_rational_latex(value: Fraction) -> str:
    """LaTeX rendering: integers bare, everything else as a signed \\frac."""
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"
