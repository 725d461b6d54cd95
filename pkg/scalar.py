"""
Exact scalar field arithmetic.

Two variants are supported: rationals (`fractions.Fraction`, always reduced with a
positive denominator) and the quadratic extension Q(sqrt5) (`QuadExt`). Rationals promote
implicitly into QuadExt when the two meet; nothing ever demotes. Floats are rejected by
every exact operation and only appear through `to_float`.

Text grammar, shared by JSON files and command line arguments:
    "3", "-1/2"             rationals
    "sqrt5", "-2*sqrt5"     pure surds
    "1/2+3/4*sqrt5"         general QuadExt (no spaces)
"""
from __future__ import annotations

import logging
import math
import re
from fractions import Fraction
from typing import Union

import logging_config  # Ensure logging is configured

# --- Setup Logger ---
logger = logging.getLogger(__name__)

Rational = Fraction


class MixedVariantError(TypeError):
    """Raised when a value that is not an exact scalar enters exact arithmetic."""


class ScalarParseError(ValueError):
    """Raised when a scalar literal does not match the text grammar."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise MixedVariantError(f"booleans are not scalars: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise MixedVariantError(f"cannot use {type(value).__name__} {value!r} in exact arithmetic")


class QuadExt:
    """An element rat + surd*sqrt5 of Q(sqrt5). Immutable."""

    __slots__ = ("_rat", "_surd")

    def __init__(self, rat=0, surd=0):
        object.__setattr__(self, "_rat", _as_fraction(rat))
        object.__setattr__(self, "_surd", _as_fraction(surd))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    @property
    def rat(self) -> Fraction:
        return self._rat

    @property
    def surd(self) -> Fraction:
        return self._surd

    @classmethod
    def from_rational(cls, value) -> QuadExt:
        return cls(_as_fraction(value), 0)

    @staticmethod
    def _coerce(other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadExt(other, 0)
        if isinstance(other, float):
            raise MixedVariantError(f"cannot mix float {other!r} with QuadExt")
        return None

    def is_rational(self) -> bool:
        return self._surd == 0

    def conjugate(self) -> QuadExt:
        """Galois conjugate rat - surd*sqrt5."""
        return QuadExt(self._rat, -self._surd)

    def field_norm(self) -> Fraction:
        return self._rat * self._rat - 5 * self._surd * self._surd

    def inverse(self) -> QuadExt:
        norm = self.field_norm()
        if norm == 0:
            raise ZeroDivisionError("QuadExt division by zero")
        return QuadExt(self._rat / norm, -self._surd / norm)

    def __repr__(self) -> str:
        return f"QuadExt({self._rat!s}, {self._surd!s})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __bool__(self) -> bool:
        return self._rat != 0 or self._surd != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, float):
            return NotImplemented
        try:
            other = self._coerce(other)
        except MixedVariantError:
            return NotImplemented
        if other is None:
            return NotImplemented
        return self._rat == other._rat and self._surd == other._surd

    def __hash__(self) -> int:
        # Equal to the hash of the rational it equals, so mixed keys stay consistent.
        if self._surd == 0:
            return hash(self._rat)
        return hash((self._rat, self._surd))

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._rat, -self._surd)

    def __pos__(self) -> QuadExt:
        return self

    def __add__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExt(self._rat + other._rat, self._surd + other._surd)

    __radd__ = __add__

    def __sub__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExt(self._rat - other._rat, self._surd - other._surd)

    def __rsub__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuadExt(
            self._rat * other._rat + 5 * self._surd * other._surd,
            self._rat * other._surd + self._surd * other._rat,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadExt:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> QuadExt:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadExt(1, 0)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def __float__(self) -> float:
        return to_float(self)


Scalar = Union[Fraction, QuadExt]

ZERO = Fraction(0)
ONE = Fraction(1)
SQRT5 = QuadExt(0, 1)


def as_scalar(value) -> Scalar:
    """Coerces ints, Fractions, QuadExts and text literals into a Scalar."""
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return _as_fraction(value)


def variant(a: Scalar) -> str:
    return "quadext" if isinstance(a, QuadExt) else "rational"


def promote(a: Scalar, b: Scalar) -> tuple[Scalar, Scalar]:
    """Brings two scalars into a common variant (Rational -> QuadExt only)."""
    a, b = as_scalar(a), as_scalar(b)
    if isinstance(a, QuadExt) and not isinstance(b, QuadExt):
        return a, QuadExt.from_rational(b)
    if isinstance(b, QuadExt) and not isinstance(a, QuadExt):
        return QuadExt.from_rational(a), b
    return a, b


def to_quadext(a: Scalar) -> QuadExt:
    a = as_scalar(a)
    return a if isinstance(a, QuadExt) else QuadExt.from_rational(a)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    a, b = promote(a, b)
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    a, b = promote(a, b)
    return a * b


def scalar_neg(a: Scalar) -> Scalar:
    return -as_scalar(a)


def scalar_inv(a: Scalar) -> Scalar:
    a = as_scalar(a)
    if isinstance(a, QuadExt):
        return a.inverse()
    if a == 0:
        raise ZeroDivisionError("Rational division by zero")
    return 1 / a


def is_zero(a: Scalar) -> bool:
    return not as_scalar(a)


# sqrt5 to 128 fractional bits; far below double precision, so the final
# rounding in float() is the only one that matters.
_SQRT5_BITS = 128
_SQRT5_APPROX = Fraction(math.isqrt(5 << (2 * _SQRT5_BITS)), 1 << _SQRT5_BITS)


def to_float(a: Scalar) -> float:
    """Nearest machine double. Used only by the canonicalization path."""
    a = as_scalar(a)
    if isinstance(a, QuadExt):
        if a.surd == 0:
            return float(a.rat)
        return float(a.rat + a.surd * _SQRT5_APPROX)
    return float(a)


_RATIONAL = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<rat>[+-]?{_RATIONAL})?"
    rf"(?:(?P<sign>[+-])?(?:(?P<coef>{_RATIONAL})\*)?(?P<sqrt>sqrt5))?$"
)


def parse_scalar(text: str) -> Scalar:
    """Parses the scalar text grammar. Pure rationals come back as Fraction."""
    literal = text.strip()
    match = _SCALAR_RE.match(literal)
    if not literal or match is None or (match["rat"] is None and match["sqrt"] is None):
        raise ScalarParseError(f"invalid scalar literal {text!r}")
    try:
        rat = Fraction(match["rat"]) if match["rat"] else ZERO
    except ZeroDivisionError:
        raise ScalarParseError(f"zero denominator in scalar literal {text!r}") from None
    if match["sqrt"] is None:
        return rat
    if match["sign"] is None and match["rat"] is not None:
        # "2sqrt5" style juxtaposition is not part of the grammar.
        raise ScalarParseError(f"missing sign before sqrt5 in {text!r}")
    try:
        surd = Fraction(match["coef"]) if match["coef"] else ONE
    except ZeroDivisionError:
        raise ScalarParseError(f"zero denominator in scalar literal {text!r}") from None
    if match["sign"] == "-":
        surd = -surd
    return QuadExt(rat, surd)


def _format_surd(surd: Fraction) -> str:
    if surd == 1:
        return "sqrt5"
    if surd == -1:
        return "-sqrt5"
    return f"{surd}*sqrt5"


def format_scalar(a: Scalar) -> str:
    """Renders a scalar in the text grammar, omitting zero parts."""
    a = as_scalar(a)
    if not isinstance(a, QuadExt):
        return str(a)
    if a.surd == 0:
        return str(a.rat)
    surd_text = _format_surd(a.surd)
    if a.rat == 0:
        return surd_text
    joiner = "" if surd_text.startswith("-") else "+"
    return f"{a.rat}{joiner}{surd_text}"
