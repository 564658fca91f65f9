# Exact rational scalars: parsing, formatting and sympy conversion

import re
from fractions import Fraction
from typing import Union

import sympy

from .errors import InputError

Scalar = Fraction
ScalarLike = Union[int, Fraction, str, sympy.Rational]

_RATIONAL_LITERAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text: str) -> Fraction:
    # Parse "p/q" or "p" with optional sign; decimals are rejected
    match = _RATIONAL_LITERAL.match(str(text))
    if match is None:
        raise InputError(f"not a rational literal: {text!r} (expected p/q)")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InputError(f"zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def as_scalar(value: ScalarLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, sympy.Basic) and value.is_Rational:
        return from_sympy(value)
    raise InputError(f"cannot use {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    value = sympy.sympify(value)
    if not value.is_Rational:
        raise InputError(f"non-rational value {value} left the rational field")
    return Fraction(int(value.p), int(value.q))


def sign(exponent: int) -> int:
    # (-1)^exponent
    return -1 if exponent % 2 else 1
