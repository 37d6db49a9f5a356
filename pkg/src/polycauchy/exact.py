"""Exact rational scalars and the canonical ``num/den`` wire format.

Every value this package computes is a :class:`fractions.Fraction`:
arbitrary precision, always canonical (positive denominator, gcd 1, zero
stored as 0/1), immutable, with structural equality.  This module pins that
choice and owns the one serialization grammar shared by the CLI and the
verification reports.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["Rational", "normalize", "pow_int", "format_rational", "parse_rational"]

Rational = Fraction


def normalize(num: int, den: int) -> Fraction:
    """Canonical fraction num/den; the sign is carried by the numerator."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def pow_int(base: Rational | int, exponent: int) -> Fraction:
    """Exact ``base ** exponent`` for an integer exponent of either sign."""
    base = Fraction(base)
    if exponent < 0 and base == 0:
        raise ZeroDivisionError("0 cannot be raised to a negative power")
    return base**exponent


def format_rational(value: Rational | int) -> str:
    """Serialize as ``"num/den"`` with den > 0; integers come out as ``"n/1"``."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``"num/den"`` grammar; bare integers are accepted too."""
    head, sep, tail = text.strip().partition("/")
    try:
        if not sep:
            return Fraction(int(head))
        return normalize(int(head), int(tail))
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
