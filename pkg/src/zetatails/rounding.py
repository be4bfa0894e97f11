"""Decimal rounding of interval endpoints, used to publish constants."""

from __future__ import annotations

import math
from fractions import Fraction

from .interval import Interval, _as_ratio, iv


def upper_fraction(x) -> Fraction:
    x = iv(x)
    return Fraction(*_as_ratio(x._b))


def lower_fraction(x) -> Fraction:
    x = iv(x)
    return Fraction(*_as_ratio(x._a))


def roundup(x, digits: int) -> Fraction:
    """Smallest multiple of 10^-digits that is >= every point of x."""
    scale = 10 ** digits
    return Fraction(math.ceil(upper_fraction(x) * scale), scale)


def rounddown(x, digits: int) -> Fraction:
    """Largest multiple of 10^-digits that is <= every point of x."""
    scale = 10 ** digits
    return Fraction(math.floor(lower_fraction(x) * scale), scale)


def fmt(q: Fraction, digits: int) -> str:
    """Render a rounded fraction with its fixed number of decimals, trimming
    trailing zeros the way the published tables do (4.0, 0.5, 9.3)."""
    scale = 10 ** digits
    n = q * scale
    assert n.denominator == 1
    n = n.numerator
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, scale)
    s = str(frac).rjust(digits, "0").rstrip("0") or "0"
    return f"{sign}{whole}.{s}"


def pos_part(x) -> Interval:
    """max(0, x) with the convention that x is kept only when certainly positive."""
    x = iv(x)
    return x if x.lo > 0 else Interval(0)
