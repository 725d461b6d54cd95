"""
Constructive solution of A v = v [v] for Jordan matrices A.

Given an imaginary vector v in generic form with nonvanishing associator, every Hermitian
A with A v = v [v] is obtained from six free real parameters (b1, b4, b7, p, m, n):

  * b5 = 0,
  * b6, b2, b3 and b8 from the closed-form expressions below,
  * conj(a) and c by back substitution into the second and third rows.

The closed forms are kept in their full shape, including the real parts x1 and y1, and
specialized to x1 = y1 = 0 when called.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from typing import Optional, Sequence

import logging_config  # Ensure logging is configured
from jordan import JordanMatrix, OctVector, shift_identity
from linalg import solve_affine, transpose
from octonion import Octonion
from scalar import ONE, ZERO, Scalar, as_scalar, format_scalar

# --- Setup Logger ---
logger = logging.getLogger(__name__)

PARAMETER_NAMES = ("b1", "b4", "b7", "p", "m", "n")


class DegenerateVector(ValueError):
    """x2, y3 or z8 vanishes, so the associator of the vector is zero."""


class NotGenericImaginary(ValueError):
    """The vector has a real part or components outside the generic pattern."""


@dataclass(frozen=True)
class SolverParams:
    """The six free parameters of the family; any six scalars are admissible."""

    b1: Scalar = ZERO
    b4: Scalar = ZERO
    b7: Scalar = ZERO
    p: Scalar = ZERO
    m: Scalar = ZERO
    n: Scalar = ZERO

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_scalar(getattr(self, f.name)))

    @classmethod
    def from_sequence(cls, values: Sequence[Scalar]) -> SolverParams:
        if len(values) != len(PARAMETER_NAMES):
            raise ValueError(f"expected 6 parameters, got {len(values)}")
        return cls(*values)

    @classmethod
    def unit(cls, name: str) -> SolverParams:
        return cls(**{name: ONE})

    def as_tuple(self) -> tuple[Scalar, ...]:
        return tuple(getattr(self, name) for name in PARAMETER_NAMES)

    def as_dict(self) -> dict[str, str]:
        return {name: format_scalar(getattr(self, name)) for name in PARAMETER_NAMES}

    def __add__(self, other: SolverParams) -> SolverParams:
        return SolverParams.from_sequence([u + w for u, w in zip(self.as_tuple(), other.as_tuple())])

    def scale(self, s: Scalar) -> SolverParams:
        s = as_scalar(s)
        return SolverParams.from_sequence([u * s for u in self.as_tuple()])


@dataclass(frozen=True)
class GenericImaginaryVector:
    """
    v = (x2 i, y2 i + y3 j, z2 i + z3 j + z4 k + z8 l). Real parts and every other
    component are identically zero.
    """

    x2: Scalar
    y2: Scalar
    y3: Scalar
    z2: Scalar
    z3: Scalar
    z4: Scalar
    z8: Scalar

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, as_scalar(getattr(self, f.name)))

    @classmethod
    def from_vector(cls, v: OctVector) -> GenericImaginaryVector:
        if not v.is_imaginary():
            raise NotGenericImaginary(f"vector {v} has a nonzero real part")
        if not v.is_generic():
            raise NotGenericImaginary(f"vector {v} is not in generic form; canonicalize it first")
        return cls(v.x[2], v.y[2], v.y[3], v.z[2], v.z[3], v.z[4], v.z[8])

    def to_vector(self) -> OctVector:
        return OctVector(
            Octonion((ZERO, self.x2)),
            Octonion((ZERO, self.y2, self.y3)),
            Octonion((ZERO, self.z2, self.z3, self.z4, ZERO, ZERO, ZERO, self.z8)),
        )

    def associator(self) -> Octonion:
        """[v], computed by octonion multiplication; always 2 x2 y3 z8 kl."""
        return self.to_vector().associator()

    def is_degenerate(self) -> bool:
        return not (self.x2 and self.y3 and self.z8)


def check_nondegenerate(v: GenericImaginaryVector) -> None:
    if v.is_degenerate():
        raise DegenerateVector(
            f"associator vanishes (x2={format_scalar(v.x2)}, y3={format_scalar(v.y3)}, z8={format_scalar(v.z8)})"
        )


def _require_nonzero(value: Scalar, what: str) -> Scalar:
    if not value:
        raise DegenerateVector(f"denominator {what} vanishes")
    return value


# --- Closed-form components of b ---

def b6_formula(x2, y2, y3, z2, z3, z4, z8, b1, b4, b7, p, m, n) -> Scalar:
    numerator = (
        -2 * y3 * z4 * z8 * x2**3
        - p * z8 * x2**2
        + 2 * y3 * z4 * z8**3 * x2
        + 2 * y3 * z4**3 * z8 * x2
        + 2 * y3**3 * z4 * z8 * x2
        - 2 * y3 * z2**2 * z4 * z8 * x2
        + 2 * y3 * z3**2 * z4 * z8 * x2
        + 2 * y2**2 * y3 * z4 * z8 * x2
        + 4 * y2 * z2 * z3 * z4 * z8 * x2
        + n * z8**3
        - 2 * b7 * y2 * z4**2
        - 2 * b7 * y2 * z8**2
        + m * y2**2 * z8
        + m * y3**2 * z8
        + n * z2**2 * z8
        + n * z3**2 * z8
        + n * z4**2 * z8
        + 2 * b1 * y2 * z2 * z8
        + 2 * b4 * y3 * z2 * z8
        - 2 * b4 * y2 * z3 * z8
        + 2 * b1 * y3 * z3 * z8
    )
    denominator = _require_nonzero(2 * y3 * (z4**2 + z8**2), "2 y3 (z4^2 + z8^2)")
    return numerator / denominator


def b8_formula(x1, y1, x2, y2, y3, z2, z8, b6, b7) -> Scalar:
    numerator = (
        2 * y3 * z2 * z8 * x2**2
        + b6 * y1 * x2
        - b6 * x1 * y2
        + b7 * x1 * y3
    )
    return numerator / _require_nonzero(x2 * y3, "x2 y3")


def b2_formula(x1, y1, x2, y2, y3, z2, z3, z4, z8, b4, b6, b7) -> Scalar:
    numerator = (
        y3**2 * z8 * x2**5
        - y3**2 * z8**3 * x2**3
        - y3**4 * z8 * x2**3
        + x1**2 * y3**2 * z8 * x2**3
        + y2**2 * y3**2 * z8 * x2**3
        + y3**2 * z2**2 * z8 * x2**3
        - y3**2 * z3**2 * z8 * x2**3
        - y3**2 * z4**2 * z8 * x2**3
        + b6 * y3**2 * z4 * x2**2
        - 2 * x1 * y2 * y3 * z2 * z4 * z8 * x2**2
        + b7 * x1 * y3**2 * z2 * x2
        - b7 * x1 * y2 * y3 * z3 * x2
        + b4 * x1 * y2 * y3 * z8 * x2
        + b6 * x1**2 * y2**2 * z4
        - b7 * x1**2 * y2 * y3 * z4
    )
    return numerator / _require_nonzero(x2**2 * y3**2 * z8, "x2^2 y3^2 z8")


def b3_formula(x1, y1, x2, y2, y3, z2, z3, z4, z8, b4, b6, b7) -> Scalar:
    numerator = (
        2 * y2 * y3**2 * z8 * x2**3
        + 2 * y3 * z2 * z3 * z8 * x2**3
        - b7 * y3 * z4 * x2**2
        - 2 * x1 * y3 * z2 * z4 * z8 * x2**2
        + b6 * x1 * y3 * z2 * x2
        - b6 * x1 * y2 * z3 * x2
        + b4 * x1 * y3 * z8 * x2
        + b6 * x1**2 * y2 * z4
        - b7 * x1**2 * y3 * z4
    )
    return numerator / _require_nonzero(x2**2 * y3 * z8, "x2^2 y3 z8")


def solve_b(v: GenericImaginaryVector, params: SolverParams) -> Octonion:
    """The off-diagonal entry b; b5 is always zero."""
    check_nondegenerate(v)
    x1 = y1 = ZERO
    P = params
    b6 = b6_formula(v.x2, v.y2, v.y3, v.z2, v.z3, v.z4, v.z8, P.b1, P.b4, P.b7, P.p, P.m, P.n)
    b2 = b2_formula(x1, y1, v.x2, v.y2, v.y3, v.z2, v.z3, v.z4, v.z8, P.b4, b6, P.b7)
    b3 = b3_formula(x1, y1, v.x2, v.y2, v.y3, v.z2, v.z3, v.z4, v.z8, P.b4, b6, P.b7)
    b8 = b8_formula(x1, y1, v.x2, v.y2, v.y3, v.z2, v.z8, b6, P.b7)
    return Octonion((P.b1, b2, b3, P.b4, ZERO, b6, P.b7, b8))


# --- Back substitution ---

def back_substitute(v: OctVector, lam: Octonion, b: Octonion, m: Scalar, n: Scalar) -> tuple[Octonion, Octonion]:
    """
    Solves the second and third rows for a and c:
        conj(a) = (y(lam - m) - b z) conj(x) / |x|^2
        c       = (z(lam - n) - conj(b) y) conj(x) / |x|^2
    """
    x, y, z = v
    norm_x = x.norm_sq()
    if not norm_x:
        raise ZeroDivisionError("back substitution needs x != 0")
    x_bar = x.conj()
    a_bar = ((y * (lam - m)) - b * z) * x_bar / norm_x
    c = ((z * (lam - n)) - b.conj() * y) * x_bar / norm_x
    return a_bar.conj(), c


def matrix_from_b(v: OctVector, lam: Octonion, b: Octonion, p: Scalar, m: Scalar, n: Scalar) -> JordanMatrix:
    a, c = back_substitute(v, lam, b, m, n)
    return JordanMatrix(p, m, n, a, b, c)


def master_residual(v: OctVector, lam: Octonion, b: Octonion, p: Scalar, m: Scalar, n: Scalar) -> Octonion:
    """
    First row after back substitution, multiplied through by |x|^2:

        (x(conj(lam) conj(y) - conj(z) conj(b))) y + (x(conj(lam) conj(z) - conj(y) b)) z
            - x lam |x|^2 - x (m|y|^2 + n|z|^2 - p|x|^2)

    Zero exactly when the back-substituted matrix has v as an eigenvector.
    """
    x, y, z = v
    lam_bar = lam.conj()
    norm_x, norm_y, norm_z = x.norm_sq(), y.norm_sq(), z.norm_sq()
    first = (x * (lam_bar * y.conj() - z.conj() * b.conj())) * y
    second = (x * (lam_bar * z.conj() - y.conj() * b)) * z
    return first + second - (x * lam).scale(norm_x) - x.scale(m * norm_y + n * norm_z - p * norm_x)


# --- The family ---

def construct(v: GenericImaginaryVector, params: SolverParams) -> JordanMatrix:
    """The member of the family with the given free parameters; v is an eigenvector with eigenvalue [v]."""
    check_nondegenerate(v)
    lam = v.associator()
    b = solve_b(v, params)
    return matrix_from_b(v.to_vector(), lam, b, params.p, params.m, params.n)


@dataclass(frozen=True)
class AffineFamily:
    """params -> base + sum(params_i * directions_i); exact, since construct is affine."""

    vector: GenericImaginaryVector
    base: JordanMatrix
    directions: tuple[JordanMatrix, ...]

    def evaluate(self, params: SolverParams) -> JordanMatrix:
        result = self.base
        for weight, direction in zip(params.as_tuple(), self.directions):
            if weight:
                result = result + direction.scale(weight)
        return result

    def direction_coordinates(self) -> list[tuple[Scalar, ...]]:
        return [d.coordinates() for d in self.directions]


def family_map(v: GenericImaginaryVector) -> AffineFamily:
    check_nondegenerate(v)
    base = construct(v, SolverParams())
    directions = tuple(construct(v, SolverParams.unit(name)) - base for name in PARAMETER_NAMES)
    return AffineFamily(vector=v, base=base, directions=directions)


@dataclass(frozen=True)
class ContainmentResult:
    in_family: bool
    params: Optional[SolverParams] = None


def contains(v: GenericImaginaryVector, A: JordanMatrix) -> ContainmentResult:
    """Decides A in family_map(v) by an exact linear solve for the six parameters."""
    family = family_map(v)
    columns = family.direction_coordinates()
    system = transpose(columns)
    target = [u - w for u, w in zip(A.coordinates(), family.base.coordinates())]
    solution = solve_affine(system, target)
    if solution is None:
        logger.info("Matrix is not in the family of the given vector.")
        return ContainmentResult(in_family=False)
    if solution.nullity:
        logger.warning(f"Family directions are dependent (nullity {solution.nullity}); witness is not unique.")
    return ContainmentResult(in_family=True, params=SolverParams.from_sequence(solution.particular))


def imaginary_shift(A: JordanMatrix, lam: Octonion) -> tuple[JordanMatrix, Octonion]:
    """(A - Re(lam) I, Im(lam)); keeps v an eigenvector with a purely imaginary eigenvalue."""
    return shift_identity(A, -lam.re()), lam.im()
