"""Parsing and rendering helpers for exact rational values.

Everything numeric in this package is a :class:`fractions.Fraction`; floats
never enter the computation path.  These helpers cover the two boundaries
where rationals meet text: reading user-supplied values ("0.5", "1/2") and
printing fixed-point decimals without going through binary floating point.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"2"``, ``"0.5"``, or ``"1/2"`` into an exact Fraction.

    Raises ValueError for anything else (including division by zero).
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def render_decimal(value: Fraction, precision: int = 2) -> str:
    """Render ``value`` as a fixed-point decimal, rounding half away from zero.

    ``render_decimal(Fraction(65, 7))`` is ``"9.29"``; trailing zeros are kept
    so output columns stay aligned (``Fraction(10)`` renders as ``"10.00"``).
    """
    if precision < 0:
        raise ValueError("precision must be non-negative")
    numerator, denominator = abs(value.numerator), value.denominator
    scaled, remainder = divmod(numerator * 10**precision, denominator)
    if 2 * remainder >= denominator:
        scaled += 1
    sign = "-" if value < 0 and scaled else ""
    digits = str(scaled)
    if precision == 0:
        return sign + digits
    digits = digits.rjust(precision + 1, "0")
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"
