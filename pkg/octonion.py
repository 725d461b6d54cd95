"""
Octonion algebra over exact scalars.

The octonions are built from the quaternions by Cayley-Dickson doubling, O = H + H l,
with the product

    (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))

and basis units in the order (1, i, j, k, kl, jl, il, l). Under this rule i*l = il,
j*l = jl, k*l = kl and the associator [i, j, l] equals +2 kl. The 8x8 signed table is
generated once from the rule and cached; nothing is entered by hand.
"""
from __future__ import annotations

import enum
import logging
import re as regex
from functools import cache
from typing import Iterable, Sequence

import logging_config  # Ensure logging is configured
from scalar import (
    ONE,
    ZERO,
    MixedVariantError,
    QuadExt,
    Scalar,
    ScalarParseError,
    as_scalar,
    format_scalar,
    parse_scalar,
    to_quadext,
)

# --- Setup Logger ---
logger = logging.getLogger(__name__)

BASIS_NAMES = ("1", "i", "j", "k", "kl", "jl", "il", "l")


class BasisUnit(enum.IntEnum):
    """Basis units, numbered 1..8 in the component order used throughout."""

    ONE = 1
    I = 2  # noqa: E741
    J = 3
    K = 4
    KL = 5
    JL = 6
    IL = 7
    L = 8

    @property
    def text(self) -> str:
        return BASIS_NAMES[self - 1]


class OctonionParseError(ValueError):
    """Raised when an octonion literal does not match the text grammar."""


# --- Multiplication table ---

def _quat_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, int, int, int]:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def _quat_conj(q: Sequence[int]) -> tuple[int, int, int, int]:
    return (q[0], -q[1], -q[2], -q[3])


def _quat_add(p, q):
    return tuple(x + y for x, y in zip(p, q))


def _quat_sub(p, q):
    return tuple(x - y for x, y in zip(p, q))


_Q1, _QI, _QJ, _QK, _Q0 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 0, 0)

# Each basis unit as a quaternion pair (a, b) <-> a + b l.
_BASIS_PAIRS = (
    (_Q1, _Q0),  # 1
    (_QI, _Q0),  # i
    (_QJ, _Q0),  # j
    (_QK, _Q0),  # k
    (_Q0, _QK),  # kl
    (_Q0, _QJ),  # jl
    (_Q0, _QI),  # il
    (_Q0, _Q1),  # l
)


def _doubling_product(u, v):
    (a, b), (c, d) = u, v
    return (
        _quat_sub(_quat_mul(a, c), _quat_mul(_quat_conj(d), b)),
        _quat_add(_quat_mul(d, a), _quat_mul(b, _quat_conj(c))),
    )


def _pair_to_coeffs(pair) -> list[int]:
    a, b = pair
    # (b0 + b1 i + b2 j + b3 k) l = b0 l + b1 il + b2 jl + b3 kl
    return [a[0], a[1], a[2], a[3], b[3], b[2], b[1], b[0]]


@cache
def multiplication_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    """
    Signed product table of the basis units, 0-based: table[r][s] = (sign, t) means
    e_r * e_s = sign * e_t.
    """
    table = []
    for r in range(8):
        row = []
        for s in range(8):
            coeffs = _pair_to_coeffs(_doubling_product(_BASIS_PAIRS[r], _BASIS_PAIRS[s]))
            nonzero = [(c, t) for t, c in enumerate(coeffs) if c != 0]
            assert len(nonzero) == 1 and abs(nonzero[0][0]) == 1, f"e{r}*e{s} is not a signed unit"
            row.append(nonzero[0])
        table.append(tuple(row))
    logger.debug("Built octonion multiplication table from the doubling rule.")
    return tuple(table)


# --- Octonion value type ---

class Octonion:
    """An octonion with 8 exact scalar coefficients, indexed in basis order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = tuple(as_scalar(c) for c in coeffs)
        if len(values) > 8:
            raise ValueError(f"an octonion has 8 coefficients, got {len(values)}")
        object.__setattr__(self, "_coeffs", values + (ZERO,) * (8 - len(values)))

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    # --- Constructors ---

    @classmethod
    def zero(cls) -> Octonion:
        return cls()

    @classmethod
    def real(cls, value) -> Octonion:
        return cls((value,))

    @classmethod
    def unit(cls, which: BasisUnit | int | str, coefficient=ONE) -> Octonion:
        if isinstance(which, str):
            index = BASIS_NAMES.index(which) + 1
        else:
            index = int(which)
        coeffs = [ZERO] * 8
        coeffs[index - 1] = as_scalar(coefficient)
        return cls(coeffs)

    @classmethod
    def parse(cls, text: str) -> Octonion:
        return parse_octonion(text)

    # --- Accessors ---

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    def __getitem__(self, index: int) -> Scalar:
        """1-based component access: w[1] is the real part, w[8] the l coefficient."""
        if not 1 <= index <= 8:
            raise IndexError(f"octonion components are numbered 1..8, got {index}")
        return self._coeffs[index - 1]

    def __iter__(self):
        return iter(self._coeffs)

    def re(self) -> Scalar:
        return self._coeffs[0]

    def im(self) -> Octonion:
        return Octonion((ZERO,) + self._coeffs[1:])

    def conj(self) -> Octonion:
        return Octonion((self._coeffs[0],) + tuple(-c for c in self._coeffs[1:]))

    def norm_sq(self) -> Scalar:
        total = ZERO
        for c in self._coeffs:
            total = total + c * c
        return total

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_real(self) -> bool:
        return not any(self._coeffs[1:])

    def is_imaginary(self) -> bool:
        return not self._coeffs[0]

    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero components."""
        return frozenset(i + 1 for i, c in enumerate(self._coeffs) if c)

    def to_quadext(self) -> Octonion:
        return Octonion(to_quadext(c) for c in self._coeffs)

    # --- Arithmetic ---

    def __add__(self, other) -> Octonion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __radd__(self, other) -> Octonion:
        return self.__add__(other)

    def __sub__(self, other) -> Octonion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Octonion(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __rsub__(self, other) -> Octonion:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> Octonion:
        return Octonion(-c for c in self._coeffs)

    def __mul__(self, other) -> Octonion:
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, str):
            return NotImplemented
        if isinstance(other, float):
            raise MixedVariantError(f"cannot scale an exact octonion by float {other!r}")
        try:
            s = as_scalar(other)
        except (TypeError, ScalarParseError):
            return NotImplemented
        return self.scale(s)

    def __rmul__(self, other) -> Octonion:
        # Real scalars are central, so s*w == w*s.
        if isinstance(other, str):
            return NotImplemented
        if isinstance(other, float):
            raise MixedVariantError(f"cannot scale an exact octonion by float {other!r}")
        try:
            s = as_scalar(other)
        except (TypeError, ScalarParseError):
            return NotImplemented
        return self.scale(s)

    def __truediv__(self, other) -> Octonion:
        s = as_scalar(other)
        if not s:
            raise ZeroDivisionError("octonion division by a zero scalar")
        return self.scale(1 / s)

    def scale(self, s: Scalar) -> Octonion:
        s = as_scalar(s)
        return Octonion(c * s for c in self._coeffs)

    # --- Comparison and display ---

    def __eq__(self, other) -> bool:
        if isinstance(other, float):
            return NotImplemented
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return all(a == b for a, b in zip(self._coeffs, other._coeffs))

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Octonion({format_octonion(self)!r})"

    def __str__(self) -> str:
        return format_octonion(self)


def _coerce(value) -> Octonion | None:
    if isinstance(value, Octonion):
        return value
    if isinstance(value, float):
        raise MixedVariantError(f"cannot mix float {value!r} with an exact octonion")
    if isinstance(value, str):
        return None
    try:
        return Octonion.real(as_scalar(value))
    except TypeError:
        return None


# Named units for convenience: 1, i, j, k, kl, jl, il, l.
E1, I, J, K, KL, JL, IL, L = (Octonion.unit(n) for n in range(1, 9))


# --- Operations ---

def oct_mul(u: Octonion, v: Octonion) -> Octonion:
    """Bilinear product under the doubling rule, via the cached basis table."""
    table = multiplication_table()
    out = [ZERO] * 8
    for r, ur in enumerate(u.coeffs):
        if not ur:
            continue
        row = table[r]
        for s, vs in enumerate(v.coeffs):
            if not vs:
                continue
            sign, t = row[s]
            if sign > 0:
                out[t] = out[t] + ur * vs
            else:
                out[t] = out[t] - ur * vs
    return Octonion(out)


def conj(w: Octonion) -> Octonion:
    return w.conj()


def re(w: Octonion) -> Scalar:
    return w.re()


def im(w: Octonion) -> Octonion:
    return w.im()


def norm_sq(w: Octonion) -> Scalar:
    return w.norm_sq()


def inner(u: Octonion, v: Octonion) -> Scalar:
    """Euclidean inner product of the coefficient vectors, Re(u conj(v))."""
    total = ZERO
    for a, b in zip(u.coeffs, v.coeffs):
        if a and b:
            total = total + a * b
    return total


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return x * y - y * x


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """[x, y, z] = (xy)z - x(yz)."""
    return (x * y) * z - x * (y * z)


# --- Text grammar ---

_TERM_RE = regex.compile(r"[+-]?[^+-]+")
_UNIT_RE = regex.compile(r"^(?P<coef>.*?)\*?(?P<unit>kl|jl|il|l|i|j|k)$")


def parse_octonion(text: str) -> Octonion:
    """
    Parses a sum of signed terms over the unit names {1, i, j, k, kl, jl, il, l},
    e.g. "3k", "sqrt5*j-2*il", "1+sqrt5*kl", "-1/2*l". Repeated units are summed.
    """
    literal = text.replace(" ", "")
    if not literal:
        raise OctonionParseError("empty octonion literal")
    terms = _TERM_RE.findall(literal)
    if "".join(terms) != literal or "*+" in literal or "*-" in literal:
        raise OctonionParseError(f"invalid octonion literal {text!r}")
    coeffs = [ZERO] * 8
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        match = _UNIT_RE.match(body)
        if match is None:
            index, coef_text = 0, body
        else:
            index, coef_text = BASIS_NAMES.index(match["unit"]), match["coef"]
        try:
            coefficient = parse_scalar(coef_text) if coef_text else ONE
        except ScalarParseError as e:
            raise OctonionParseError(f"invalid term {term!r} in {text!r}") from e
        coeffs[index] = coeffs[index] + sign * coefficient
    return Octonion(coeffs)


def _format_term(coefficient: Scalar, unit: str) -> list[str]:
    """Signed text pieces for one component; a mixed QuadExt becomes two terms."""
    if isinstance(coefficient, QuadExt) and coefficient.rat and coefficient.surd:
        parts = [coefficient.rat, QuadExt(0, coefficient.surd)]
    else:
        parts = [coefficient]
    pieces = []
    for part in parts:
        text = format_scalar(part)
        if unit == "1":
            pieces.append(text)
        elif text in ("1", "-1"):
            pieces.append(text[:-1] + unit)
        elif "/" in text or "sqrt5" in text:
            pieces.append(f"{text}*{unit}")
        else:
            pieces.append(f"{text}{unit}")
    return pieces


def format_octonion(w: Octonion) -> str:
    """Renders an octonion in the text grammar, components in basis order."""
    pieces = []
    for coefficient, unit in zip(w.coeffs, BASIS_NAMES):
        if coefficient:
            pieces.extend(_format_term(coefficient, unit))
    if not pieces:
        return "0"
    text = pieces[0]
    for piece in pieces[1:]:
        text += piece if piece.startswith("-") else f"+{piece}"
    return text
