"""
Exact rational scalars. ``fractions.Fraction`` is the only numeric type on the
decision path: it keeps numerator and denominator in lowest terms with a
positive denominator and never rounds.
"""

import re
from fractions import Fraction

from core.errors import RationalParseError

RationalScalar = Fraction

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$", re.ASCII)
_DECIMAL = re.compile(r"^[+-]?(\d+\.\d*|\.\d+)$", re.ASCII)

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def parse_rational(text: str, accept_decimal: bool = False) -> Fraction:
    """
    Parse an integer or "p/q" token into an exact rational.

    Args:
        text (str): token to parse
        accept_decimal (bool, optional): also accept finite decimals such as
            "0.5", converted exactly. Defaults to False.

    Raises:
        RationalParseError: malformed token, zero denominator, or a decimal
            while decimals are not accepted

    Returns:
        Fraction: the parsed value
    """
    token = text.strip()
    if _RATIONAL.match(token):
        numerator, _, denominator = token.partition("/")
        if denominator and int(denominator) == 0:
            raise RationalParseError(f"zero denominator in '{token}'")
        return Fraction(int(numerator), int(denominator) if denominator else 1)
    if _DECIMAL.match(token):
        if not accept_decimal:
            raise RationalParseError(
                f"decimal '{token}' rejected, use p/q or pass --accept-decimal"
            )
        return Fraction(token)
    raise RationalParseError(f"malformed rational '{token}'")


def format_rational(value: Fraction) -> str:
    """
    Render a rational as "p/q", or "p" when the denominator is 1.
    """
    return str(Fraction(value))


def to_rational(value) -> Fraction:
    """
    Convert an int, Fraction or rational string to Fraction. Floats are
    rejected so that binary rounding never enters a matrix.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)
