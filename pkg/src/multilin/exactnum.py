"""Exact scalars.

The scalar field is ``fractions.Fraction``; this module adds the parsing,
formatting and float conversion the rest of the package needs.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    return math.factorial(k)


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact scalar")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    return str(x)


def to_float(x: Fraction) -> float:
    """Nearest binary64; raises ``OverflowError`` when out of range."""
    # int/int true division is correctly rounded and raises on overflow
    return x.numerator / x.denominator


def common_denominator(values) -> int:
    den = 1
    for v in values:
        d = v.denominator
        if d != 1:
            den = math.lcm(den, d)
    return den


def scale_to_ints(values) -> tuple[list[int], int]:
    """Return ``(ints, den)`` with ``values[i] == ints[i] / den``."""
    den = common_denominator(values)
    if den == 1:
        return [v.numerator for v in values], 1
    return [v.numerator * (den // v.denominator) for v in values], den
