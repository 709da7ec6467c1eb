# Butterfly/core/rational.py

from fractions import Fraction

# every inequality side is an exact reduced fraction
Rat = Fraction


def format_rat(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rat(text: str) -> Fraction:
    numerator, _, denominator = text.strip().partition("/")
    return Fraction(int(numerator), int(denominator or 1))
