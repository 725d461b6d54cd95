"""
Independent check of A v = v lam by brute-force linear algebra.

With v and lam fixed, A v - v lam is linear in the 27 real coordinates of A. Evaluating
`jordan.apply` on each Hermitian coordinate basis matrix yields the columns of a 24x27
exact system M coords(A) = flatten(v lam), which is then solved by Gauss-Jordan
elimination. Nothing here uses the closed forms of the solver module.
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
from dotenv import load_dotenv

import logging_config  # Ensure logging is configured
from jordan import COORDINATE_NAMES, DIMENSION, JordanMatrix, OctVector, apply
from linalg import mat_vec, solve_affine, spans_equal, transpose
from octonion import Octonion
from scalar import Scalar, format_scalar
from solver import GenericImaginaryVector, SolverParams, check_nondegenerate, construct, family_map

# --- Setup Logger ---
logger = logging.getLogger(__name__)

load_dotenv()

ORACLE_SAMPLES = int(os.getenv("ORACLE_SAMPLES", "20"))
ORACLE_SEED = int(os.getenv("ORACLE_SEED", "0"))

UNKNOWNS = COORDINATE_NAMES
B5_INDEX = UNKNOWNS.index("b5")
EXPECTED_NULLITY = 6


class OracleError(AssertionError):
    """A reported solution failed re-substitution into its own system."""


@dataclass(frozen=True)
class RealLinearSystem:
    """24 real equations in the 27 unknowns (p, m, n, a1..a8, b1..b8, c1..c8)."""

    matrix: tuple[tuple[Scalar, ...], ...]
    rhs: tuple[Scalar, ...]
    vector: OctVector
    eigenvalue: Octonion

    def evaluate(self, coords) -> list[Scalar]:
        return mat_vec(self.matrix, coords)

    def is_satisfied_by(self, coords) -> bool:
        return self.evaluate(coords) == list(self.rhs)


@dataclass(frozen=True)
class AffineSolutionSet:
    status: str  # "empty" or "nonempty"
    particular: Optional[tuple[Scalar, ...]] = None
    nullspace_basis: tuple[tuple[Scalar, ...], ...] = ()
    nullity: int = 0

    @property
    def is_empty(self) -> bool:
        return self.status == "empty"

    def contains(self, coords) -> bool:
        """Whether coords - particular lies in the span of the nullspace basis."""
        if self.is_empty:
            return False
        offset = [u - w for u, w in zip(coords, self.particular)]
        if not any(offset):
            return True
        return spans_equal(list(self.nullspace_basis), list(self.nullspace_basis) + [offset])


def build_system(v: OctVector, lam: Octonion) -> RealLinearSystem:
    """Columns are flatten(apply(E_u, v)) for the coordinate basis matrices E_u."""
    columns = [apply(JordanMatrix.basis(u), v).flatten() for u in range(DIMENSION)]
    matrix = tuple(tuple(row) for row in transpose(columns))
    rhs = v.right_mul(lam).flatten()
    return RealLinearSystem(matrix=matrix, rhs=rhs, vector=v, eigenvalue=lam)


def solve(system: RealLinearSystem) -> AffineSolutionSet:
    solution = solve_affine(system.matrix, system.rhs)
    if solution is None:
        return AffineSolutionSet(status="empty")

    if not system.is_satisfied_by(solution.particular):
        raise OracleError("particular solution does not satisfy the system")
    zero = [0] * len(system.rhs)
    for direction in solution.nullspace:
        if mat_vec(system.matrix, direction) != zero:
            raise OracleError(f"nullspace vector {[format_scalar(s) for s in direction]} is not in the kernel")

    return AffineSolutionSet(
        status="nonempty",
        particular=solution.particular,
        nullspace_basis=solution.nullspace,
        nullity=solution.nullity,
    )


def solution_matrices(solutions: AffineSolutionSet) -> list[JordanMatrix]:
    """The particular solution followed by the nullspace directions, as Jordan matrices."""
    if solutions.is_empty:
        return []
    return [JordanMatrix.from_coordinates(solutions.particular)] + [
        JordanMatrix.from_coordinates(d) for d in solutions.nullspace_basis
    ]


# --- Cross validation against the solver ---

@dataclass
class CrossValidationReport:
    nullity: int
    samples: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def fail(self, check: str, witness: str) -> None:
        self.checks[check] = False
        self.failures.append(f"{check}: {witness}")

    def raise_for_failures(self) -> None:
        if not self.passed:
            raise OracleError("; ".join(self.failures))


def random_params(rng: np.random.Generator, bound: int = 10) -> SolverParams:
    """Six rationals with numerators in [-bound, bound] and denominators in [1, bound]."""
    numerators = rng.integers(-bound, bound + 1, size=6)
    denominators = rng.integers(1, bound + 1, size=6)
    return SolverParams.from_sequence([Fraction(int(a), int(d)) for a, d in zip(numerators, denominators)])


def cross_validate(
    v: GenericImaginaryVector,
    samples: int = ORACLE_SAMPLES,
    seed: int = ORACLE_SEED,
) -> CrossValidationReport:
    """
    Runs both paths for the same vector and records four checks:
      nullity        the oracle solution set has dimension 6
      membership     construct(v, P) solves the system for random P
      b5_vanishes    b5 = 0 on the particular solution and every nullspace vector
      same_family    the solver's directions span the oracle's nullspace
    """
    check_nondegenerate(v)
    vector = v.to_vector()
    system = build_system(vector, v.associator())
    solutions = solve(system)
    report = CrossValidationReport(nullity=solutions.nullity, samples=samples)
    logger.info(f"Cross-validating {vector} with {samples} samples (seed {seed}).")

    report.checks["nullity"] = True
    if solutions.is_empty:
        report.fail("nullity", "oracle system is inconsistent")
        return report
    if solutions.nullity != EXPECTED_NULLITY:
        report.fail("nullity", f"oracle nullity is {solutions.nullity}")

    report.checks["membership"] = True
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        params = random_params(rng)
        coords = construct(v, params).coordinates()
        if not system.is_satisfied_by(coords):
            report.fail("membership", f"construct(v, {params.as_dict()}) is not an oracle solution")

    report.checks["b5_vanishes"] = True
    for label, coords in [("particular", solutions.particular)] + [
        (f"basis[{i}]", d) for i, d in enumerate(solutions.nullspace_basis)
    ]:
        if coords[B5_INDEX]:
            report.fail("b5_vanishes", f"{label} has b5 = {format_scalar(coords[B5_INDEX])}")

    report.checks["same_family"] = True
    directions = family_map(v).direction_coordinates()
    if not spans_equal(directions, list(solutions.nullspace_basis)):
        report.fail("same_family", "solver directions and oracle nullspace span different subspaces")

    if report.passed:
        logger.info(f"Cross validation passed for {vector}.")
    else:
        logger.warning(f"Cross validation failed for {vector}: {report.failures}")
    return report
