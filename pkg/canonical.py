"""
Change of octonionic basis bringing a vector into generic form.

A Cayley triple (u1, u2, u4) of orthonormal imaginary octonions, with u4 orthogonal to the
quaternion subalgebra spanned by 1, u1, u2, u1 u2, defines the automorphism

    (1, i, j, k, kl, jl, il, l)  ->  (1, u1, u2, u1u2, (u1u2)u4, u2u4, u1u4, u4).

Taking u1 along Im(x), u2 along the part of Im(y) orthogonal to u1 and u4 along the part
of Im(z) orthogonal to 1, u1, u2, u1u2 makes the pulled-back vector generic:
x in span{1, i}, y in span{1, i, j}, z in span{1, i, j, k, l}, with x2, y3, z8 > 0.

`canonicalize` does this in floating point. `canonicalize_exact` repeats it over the
rationals and succeeds whenever the three norms involved are rational squares.
"""
from __future__ import annotations

import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Sequence, Union

import numpy as np
from dotenv import load_dotenv

import logging_config  # Ensure logging is configured
from jordan import GENERIC_SUPPORT, JordanMatrix, OctVector
from octonion import Octonion, inner, multiplication_table
from scalar import QuadExt, Scalar, as_scalar, to_float

# --- Setup Logger ---
logger = logging.getLogger(__name__)

load_dotenv()

CANONICAL_TOL = float(os.getenv("CANONICAL_TOL", "1e-9"))
CANONICAL_MAX_DENOMINATOR = int(os.getenv("CANONICAL_MAX_DENOMINATOR", "1000"))
ROUNDING_ERROR_THRESHOLD = float(os.getenv("ROUNDING_ERROR_THRESHOLD", "1e-6"))


class QuaternionicInput(ValueError):
    """The triple lies in a quaternion subalgebra (its associator vanishes within tolerance)."""


class NonRationalNorm(ValueError):
    """An exact normalization needs the square root of a rational that is not a square."""


@cache
def structure_tensor() -> np.ndarray:
    """T[r, s, t] = sign when e_r e_s = sign e_t, from the exact multiplication table."""
    T = np.zeros((8, 8, 8))
    for r, row in enumerate(multiplication_table()):
        for s, (sign, t) in enumerate(row):
            T[r, s, t] = sign
    T.setflags(write=False)
    return T


@dataclass(frozen=True, eq=False)
class FloatOctonion:
    """Numeric mirror of Octonion; shares the signed multiplication table."""

    coeffs: np.ndarray

    def __post_init__(self):
        array = np.asarray(self.coeffs, dtype=float).reshape(8)
        object.__setattr__(self, "coeffs", array)

    @classmethod
    def from_octonion(cls, w: Octonion) -> FloatOctonion:
        return cls(np.array([to_float(c) for c in w.coeffs]))

    @classmethod
    def unit(cls, index: int) -> FloatOctonion:
        coeffs = np.zeros(8)
        coeffs[index - 1] = 1.0
        return cls(coeffs)

    def __mul__(self, other: FloatOctonion) -> FloatOctonion:
        if isinstance(other, FloatOctonion):
            return FloatOctonion(np.einsum("r,s,rst->t", self.coeffs, other.coeffs, structure_tensor()))
        return FloatOctonion(self.coeffs * float(other))

    def __add__(self, other: FloatOctonion) -> FloatOctonion:
        return FloatOctonion(self.coeffs + other.coeffs)

    def __sub__(self, other: FloatOctonion) -> FloatOctonion:
        return FloatOctonion(self.coeffs - other.coeffs)

    def __neg__(self) -> FloatOctonion:
        return FloatOctonion(-self.coeffs)

    def scale(self, s: float) -> FloatOctonion:
        return FloatOctonion(self.coeffs * s)

    def conj(self) -> FloatOctonion:
        return FloatOctonion(self.coeffs * np.array([1.0] + [-1.0] * 7))

    def im(self) -> FloatOctonion:
        coeffs = self.coeffs.copy()
        coeffs[0] = 0.0
        return FloatOctonion(coeffs)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def dot(self, other: FloatOctonion) -> float:
        return float(self.coeffs @ other.coeffs)


FloatVector = tuple[FloatOctonion, FloatOctonion, FloatOctonion]


def as_float_vector(v: Union[OctVector, Sequence]) -> FloatVector:
    if isinstance(v, OctVector):
        return tuple(FloatOctonion.from_octonion(w) for w in v)
    components = tuple(w if isinstance(w, FloatOctonion) else FloatOctonion(w) for w in v)
    if len(components) != 3:
        raise ValueError(f"a vector has 3 components, got {len(components)}")
    return components


def float_associator(x: FloatOctonion, y: FloatOctonion, z: FloatOctonion) -> FloatOctonion:
    return (x * y) * z - x * (y * z)


def cayley_basis(u1, u2, u4) -> tuple:
    """
    Images of (1, i, j, k, kl, jl, il, l) under the automorphism determined by the Cayley
    triple (u1, u2, u4). Works for Octonion and FloatOctonion alike.
    """
    one = type(u1).unit(1)
    u3 = u1 * u2
    return (one, u1, u2, u3, u3 * u4, u2 * u4, u1 * u4, u4)


@dataclass(frozen=True, eq=False)
class BasisTransform:
    """Orthogonal 8x8 matrix whose columns are the images of the standard basis."""

    matrix: np.ndarray
    tol: float = CANONICAL_TOL

    @classmethod
    def from_images(cls, images: Sequence[FloatOctonion], tol: float = CANONICAL_TOL) -> BasisTransform:
        return cls(np.column_stack([w.coeffs for w in images]), tol)

    @classmethod
    def identity(cls, tol: float = CANONICAL_TOL) -> BasisTransform:
        return cls(np.eye(8), tol)

    def apply(self, w: FloatOctonion) -> FloatOctonion:
        """phi(w), in standard coordinates."""
        return FloatOctonion(self.matrix @ w.coeffs)

    def pull_back(self, w: FloatOctonion) -> FloatOctonion:
        """phi^-1(w); the inverse of an orthogonal matrix is its transpose."""
        return FloatOctonion(self.matrix.T @ w.coeffs)

    def inverse(self) -> BasisTransform:
        return BasisTransform(self.matrix.T.copy(), self.tol)

    def orthogonality_defect(self) -> float:
        return float(np.max(np.abs(self.matrix.T @ self.matrix - np.eye(8))))

    def automorphism_defect(self) -> float:
        """max over the 64 basis pairs of |phi(e_r e_s) - phi(e_r) phi(e_s)|."""
        T = structure_tensor()
        M = self.matrix
        products = np.einsum("ar,bs,abt->rst", M, M, T)
        images = np.einsum("rsu,tu->rst", T, M)
        return float(np.max(np.abs(products - images)))

    def is_automorphism(self) -> bool:
        return self.orthogonality_defect() < self.tol and self.automorphism_defect() < self.tol


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    transform: BasisTransform
    generic: FloatVector
    residual_offgeneric: float


def offgeneric_residual(components: Sequence[np.ndarray]) -> float:
    """Largest magnitude among components outside the generic pattern."""
    worst = 0.0
    for coeffs, allowed in zip(components, GENERIC_SUPPORT):
        for index, value in enumerate(coeffs, start=1):
            if index not in allowed:
                worst = max(worst, abs(float(value)))
    return worst


def _unit_part(w: FloatOctonion, against: Sequence[FloatOctonion], tol: float, what: str) -> FloatOctonion:
    for u in against:
        w = w - u.scale(w.dot(u))
    length = w.norm()
    if length < tol:
        raise QuaternionicInput(f"{what} has norm {length:.3g} below tolerance {tol:g}")
    return w.scale(1.0 / length)


def canonicalize(v: Union[OctVector, Sequence], tol: float = CANONICAL_TOL) -> CanonicalForm:
    """Finds phi with phi^-1(v) generic; raises QuaternionicInput when [v] vanishes within tol."""
    x, y, z = as_float_vector(v)
    associator_norm = float_associator(x, y, z).norm()
    if associator_norm <= tol:
        raise QuaternionicInput(f"associator vanishes (|[v]| = {associator_norm:.3g})")

    u1 = _unit_part(x.im(), [], tol, "Im(x)")
    u2 = _unit_part(y.im(), [u1], tol, "Im(y) orthogonal to Im(x)")
    u4 = _unit_part(z.im(), [u1, u2, u1 * u2], tol, "Im(z) orthogonal to the subalgebra of x, y")

    transform = BasisTransform.from_images(cayley_basis(u1, u2, u4), tol)
    generic = tuple(transform.pull_back(w) for w in (x, y, z))
    residual = offgeneric_residual([w.coeffs for w in generic])
    logger.debug(
        f"Canonicalized vector: automorphism defect {transform.automorphism_defect():.2e}, "
        f"off-generic residual {residual:.2e}."
    )
    return CanonicalForm(transform=transform, generic=generic, residual_offgeneric=residual)


# --- Rational rounding ---

@dataclass(frozen=True)
class RoundedOctonion:
    value: Octonion
    max_error: float
    poorly_approximated: bool


def round_scalar(value: float, max_denominator: int) -> tuple[Fraction, float]:
    """Best rational approximation with bounded denominator, and its absolute error."""
    approximation = Fraction(value).limit_denominator(max_denominator)
    return approximation, abs(float(approximation) - value)


def round_to_rational(
    w: Union[FloatOctonion, Sequence[float]],
    max_denominator: int = CANONICAL_MAX_DENOMINATOR,
    threshold: float = ROUNDING_ERROR_THRESHOLD,
) -> RoundedOctonion:
    """Rounds each component; the result is flagged when some error exceeds threshold."""
    coeffs = w.coeffs if isinstance(w, FloatOctonion) else np.asarray(w, dtype=float).reshape(8)
    rounded = [round_scalar(float(c), max_denominator) for c in coeffs]
    max_error = max(error for _, error in rounded)
    flagged = max_error > threshold
    if flagged:
        logger.warning(
            f"Rational rounding with max denominator {max_denominator} leaves error {max_error:.3g}."
        )
    return RoundedOctonion(Octonion(r for r, _ in rounded), max_error, flagged)


def rationalize_vector(
    vector: FloatVector,
    max_denominator: int = CANONICAL_MAX_DENOMINATOR,
    threshold: float = ROUNDING_ERROR_THRESHOLD,
) -> tuple[OctVector, float, bool]:
    parts = [round_to_rational(w, max_denominator, threshold) for w in vector]
    return (
        OctVector(*(part.value for part in parts)),
        max(part.max_error for part in parts),
        any(part.poorly_approximated for part in parts),
    )


# --- Exact canonicalization ---

def exact_sqrt(value: Scalar) -> Fraction:
    """Square root of a nonnegative rational square."""
    value = as_scalar(value)
    if isinstance(value, QuadExt):
        if not value.is_rational():
            raise NonRationalNorm(f"{value} is not rational")
        value = value.rat
    if value < 0:
        raise NonRationalNorm(f"{value} is negative")
    num, den = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        raise NonRationalNorm(f"{value} is not the square of a rational")
    return Fraction(num, den)


@dataclass(frozen=True)
class CayleyBasis:
    """Exact orthonormal Cayley basis; columns of an automorphism of the octonions."""

    images: tuple[Octonion, ...]

    @classmethod
    def from_triple(cls, u1: Octonion, u2: Octonion, u4: Octonion) -> CayleyBasis:
        return cls(cayley_basis(u1, u2, u4))

    @classmethod
    def identity(cls) -> CayleyBasis:
        return cls(tuple(Octonion.unit(n) for n in range(1, 9)))

    def push_forward(self, w: Octonion) -> Octonion:
        total = Octonion.zero()
        for coefficient, image in zip(w.coeffs, self.images):
            if coefficient:
                total = total + image.scale(coefficient)
        return total

    def pull_back(self, w: Octonion) -> Octonion:
        return Octonion(inner(w, image) for image in self.images)

    def push_vector(self, v: OctVector) -> OctVector:
        return OctVector(*(self.push_forward(w) for w in v))

    def pull_vector(self, v: OctVector) -> OctVector:
        return OctVector(*(self.pull_back(w) for w in v))

    def push_matrix(self, A: JordanMatrix) -> JordanMatrix:
        return JordanMatrix(A.p, A.m, A.n, self.push_forward(A.a), self.push_forward(A.b), self.push_forward(A.c))

    def pull_matrix(self, A: JordanMatrix) -> JordanMatrix:
        return JordanMatrix(A.p, A.m, A.n, self.pull_back(A.a), self.pull_back(A.b), self.pull_back(A.c))

    def compose(self, inner_basis: CayleyBasis) -> CayleyBasis:
        """self after inner_basis."""
        return CayleyBasis(tuple(self.push_forward(image) for image in inner_basis.images))

    def is_automorphism(self) -> bool:
        """Exact check over all 64 basis pairs plus orthonormality."""
        for r, image_r in enumerate(self.images):
            for s, image_s in enumerate(self.images):
                if inner(image_r, image_s) != (1 if r == s else 0):
                    return False
        table = multiplication_table()
        for r, row in enumerate(table):
            for s, (sign, t) in enumerate(row):
                if self.images[r] * self.images[s] != self.images[t].scale(sign):
                    return False
        return True

    def to_transform(self, tol: float = CANONICAL_TOL) -> BasisTransform:
        return BasisTransform.from_images([FloatOctonion.from_octonion(w) for w in self.images], tol)


@dataclass(frozen=True)
class ExactCanonicalForm:
    basis: CayleyBasis
    generic: OctVector


def _exact_unit_part(w: Octonion, against: Sequence[Octonion], what: str) -> Octonion:
    for u in against:
        w = w - u.scale(inner(w, u))
    norm_sq = w.norm_sq()
    if not norm_sq:
        raise QuaternionicInput(f"{what} vanishes")
    return w / exact_sqrt(norm_sq)


def canonicalize_exact(v: OctVector) -> ExactCanonicalForm:
    """
    Exact counterpart of `canonicalize`. Raises QuaternionicInput when [v] = 0 and
    NonRationalNorm when a normalization would leave the rationals.
    """
    if v.associator().is_zero():
        raise QuaternionicInput("associator vanishes")
    x, y, z = v
    u1 = _exact_unit_part(x.im(), [], "Im(x)")
    u2 = _exact_unit_part(y.im(), [u1], "Im(y) orthogonal to Im(x)")
    u4 = _exact_unit_part(z.im(), [u1, u2, u1 * u2], "Im(z) orthogonal to the subalgebra of x, y")
    basis = CayleyBasis.from_triple(u1, u2, u4)
    return ExactCanonicalForm(basis=basis, generic=basis.pull_vector(v))
