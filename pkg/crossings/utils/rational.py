"""Text renderings of exact rationals."""

from fractions import Fraction
from typing import Union

SIGNIFICANT_DIGITS = 12


def fraction_str(value: Union[Fraction, int]) -> str:
    """Always "p/q", including integers ("2/1")."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def decimal_str(value: Union[Fraction, float, int]) -> str:
    return format(float(value), f".{SIGNIFICANT_DIGITS}g")
