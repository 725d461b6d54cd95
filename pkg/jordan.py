"""
Jordan matrices (3x3 Hermitian octonionic) and octonionic 3-vectors.

A Jordan matrix stores only its free data (p, m, n, a, b, c) and reads as

    | p      a      conj(c) |
    | conj(a) m     b       |
    | c      conj(b) n      |

so Hermiticity holds by construction. Eigenvalues always multiply from the right:
A v = v lambda.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import logging_config  # Ensure logging is configured
from octonion import Octonion, associator
from scalar import ONE, ZERO, Scalar, as_scalar

# --- Setup Logger ---
logger = logging.getLogger(__name__)

# Real coordinates of a Jordan matrix: p, m, n, then a, b, c components 1..8.
COORDINATE_NAMES = ("p", "m", "n") + tuple(
    f"{name}{index}" for name in ("a", "b", "c") for index in range(1, 9)
)
DIMENSION = len(COORDINATE_NAMES)

# Components allowed to be nonzero in generic position (1-based).
GENERIC_SUPPORT = (
    frozenset({1, 2}),
    frozenset({1, 2, 3}),
    frozenset({1, 2, 3, 4, 8}),
)


@dataclass(frozen=True)
class OctVector:
    """A column vector (x, y, z) in O^3."""

    x: Octonion = field(default_factory=Octonion.zero)
    y: Octonion = field(default_factory=Octonion.zero)
    z: Octonion = field(default_factory=Octonion.zero)

    @classmethod
    def zero(cls) -> OctVector:
        return cls()

    def __iter__(self) -> Iterator[Octonion]:
        return iter((self.x, self.y, self.z))

    def associator(self) -> Octonion:
        """[v] = [x, y, z]."""
        return associator(self.x, self.y, self.z)

    def re(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.x.re(), self.y.re(), self.z.re())

    def im(self) -> OctVector:
        return OctVector(self.x.im(), self.y.im(), self.z.im())

    def is_imaginary(self) -> bool:
        """Re(v) = 0, i.e. all three real parts vanish."""
        return not any(self.re())

    def is_generic(self) -> bool:
        """x in span{1,i}, y in span{1,i,j}, z in span{1,i,j,k,l}."""
        return all(w.support() <= allowed for w, allowed in zip(self, GENERIC_SUPPORT))

    def is_zero(self) -> bool:
        return all(w.is_zero() for w in self)

    def right_mul(self, lam: Octonion) -> OctVector:
        """v lambda, componentwise."""
        return OctVector(self.x * lam, self.y * lam, self.z * lam)

    def scale(self, s: Scalar) -> OctVector:
        return OctVector(self.x.scale(s), self.y.scale(s), self.z.scale(s))

    def flatten(self) -> tuple[Scalar, ...]:
        """The 24 real components, x first."""
        return self.x.coeffs + self.y.coeffs + self.z.coeffs

    def __add__(self, other: OctVector) -> OctVector:
        return OctVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: OctVector) -> OctVector:
        return OctVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> OctVector:
        return OctVector(-self.x, -self.y, -self.z)

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"


@dataclass(frozen=True)
class JordanMatrix:
    """Hermitian 3x3 octonionic matrix with real diagonal (p, m, n) and a, b, c off it."""

    p: Scalar = ZERO
    m: Scalar = ZERO
    n: Scalar = ZERO
    a: Octonion = field(default_factory=Octonion.zero)
    b: Octonion = field(default_factory=Octonion.zero)
    c: Octonion = field(default_factory=Octonion.zero)

    def __post_init__(self):
        for name in ("p", "m", "n"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def zero(cls) -> JordanMatrix:
        return cls()

    @classmethod
    def identity(cls) -> JordanMatrix:
        return cls(ONE, ONE, ONE)

    @classmethod
    def from_coordinates(cls, coords: Sequence[Scalar]) -> JordanMatrix:
        if len(coords) != DIMENSION:
            raise ValueError(f"a Jordan matrix has {DIMENSION} real coordinates, got {len(coords)}")
        return cls(
            coords[0],
            coords[1],
            coords[2],
            Octonion(coords[3:11]),
            Octonion(coords[11:19]),
            Octonion(coords[19:27]),
        )

    @classmethod
    def basis(cls, index: int) -> JordanMatrix:
        """The index-th Hermitian coordinate basis matrix (0-based, COORDINATE_NAMES order)."""
        coords = [ZERO] * DIMENSION
        coords[index] = ONE
        return cls.from_coordinates(coords)

    def coordinates(self) -> tuple[Scalar, ...]:
        return (self.p, self.m, self.n) + self.a.coeffs + self.b.coeffs + self.c.coeffs

    def rows(self) -> tuple[tuple[Octonion, Octonion, Octonion], ...]:
        """All nine entries; the conjugate entries are derived on read."""
        p, m, n = (Octonion.real(s) for s in (self.p, self.m, self.n))
        return (
            (p, self.a, self.c.conj()),
            (self.a.conj(), m, self.b),
            (self.c, self.b.conj(), n),
        )

    def entry(self, row: int, column: int) -> Octonion:
        """1-based entry access."""
        return self.rows()[row - 1][column - 1]

    def shift_identity(self, t: Scalar) -> JordanMatrix:
        return shift_identity(self, t)

    def scale(self, s: Scalar) -> JordanMatrix:
        s = as_scalar(s)
        return JordanMatrix(self.p * s, self.m * s, self.n * s, self.a.scale(s), self.b.scale(s), self.c.scale(s))

    def __add__(self, other: JordanMatrix) -> JordanMatrix:
        return JordanMatrix(
            self.p + other.p,
            self.m + other.m,
            self.n + other.n,
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
        )

    def __sub__(self, other: JordanMatrix) -> JordanMatrix:
        return self + other.scale(-ONE)

    def __matmul__(self, v: OctVector) -> OctVector:
        return apply(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, JordanMatrix):
            return NotImplemented
        return self.coordinates() == other.coordinates()

    def __hash__(self) -> int:
        return hash(self.coordinates())


@dataclass(frozen=True)
class EigenPair:
    """A right eigenpair: A v = v lambda."""

    vector: OctVector
    eigenvalue: Octonion


def apply(A: JordanMatrix, v: OctVector) -> OctVector:
    """
    A v with each entry a sum of binary products, exactly as written:
        p x + a y + conj(c) z
        conj(a) x + m y + b z
        c x + conj(b) y + n z
    """
    x, y, z = v
    return OctVector(
        x.scale(A.p) + A.a * y + A.c.conj() * z,
        A.a.conj() * x + y.scale(A.m) + A.b * z,
        A.c * x + A.b.conj() * y + z.scale(A.n),
    )


def residual(A: JordanMatrix, pair: EigenPair) -> OctVector:
    """A v - v lambda; the zero vector iff the pair is an exact right eigenpair."""
    return apply(A, pair.vector) - pair.vector.right_mul(pair.eigenvalue)


def is_eigenpair(A: JordanMatrix, pair: EigenPair) -> bool:
    return residual(A, pair).is_zero()


def shift_identity(A: JordanMatrix, t: Scalar) -> JordanMatrix:
    """A + t I. Eigenpairs (v, lambda) of A become (v, lambda + t)."""
    t = as_scalar(t)
    return JordanMatrix(A.p + t, A.m + t, A.n + t, A.a, A.b, A.c)
