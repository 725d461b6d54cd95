"""
Exact linear algebra over the scalar field (rationals or Q(sqrt5)).

Gauss-Jordan elimination with first-nonzero pivoting; no magnitude heuristics are needed
because nothing is ever rounded. Matrices are plain lists of rows.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import logging_config  # Ensure logging is configured
from scalar import ONE, ZERO, Scalar

# --- Setup Logger ---
logger = logging.getLogger(__name__)

Matrix = list[list[Scalar]]
Vector = list[Scalar]


@dataclass(frozen=True)
class RowEchelon:
    """Reduced row echelon form of an augmented system."""

    rows: tuple[tuple[Scalar, ...], ...]
    rhs: tuple[Scalar, ...]
    pivots: tuple[int, ...]
    n_cols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def free_columns(self) -> tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(c for c in range(self.n_cols) if c not in pivot_set)

    def is_consistent(self) -> bool:
        return not any(self.rhs[r] for r in range(self.rank, len(self.rhs)))


@dataclass(frozen=True)
class AffineSolution:
    """particular + span(nullspace); nullity = n_cols - rank."""

    particular: tuple[Scalar, ...]
    nullspace: tuple[tuple[Scalar, ...], ...]
    rank: int

    @property
    def nullity(self) -> int:
        return len(self.nullspace)


def rref(matrix: Sequence[Sequence[Scalar]], rhs: Optional[Sequence[Scalar]] = None) -> RowEchelon:
    """Gauss-Jordan elimination; the pivot is the first nonzero entry in column order."""
    m: Matrix = [list(row) for row in matrix]
    t: Vector = list(rhs) if rhs is not None else [ZERO] * len(m)
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    if len(t) != n_rows:
        raise ValueError(f"rhs has {len(t)} entries for {n_rows} rows")

    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        if piv_r == n_rows:
            break
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c]:
                break
        else:
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            t[piv_r], t[i_row] = t[i_row], t[piv_r]

        inv = ONE / m[piv_r][piv_c]
        m[piv_r] = [entry * inv for entry in m[piv_r]]
        t[piv_r] = t[piv_r] * inv

        for r in range(n_rows):
            if r == piv_r:
                continue
            factor = m[r][piv_c]
            if not factor:
                continue
            pivot_row = m[piv_r]
            m[r] = [entry - factor * p for entry, p in zip(m[r], pivot_row)]
            t[r] = t[r] - factor * t[piv_r]
        pivots.append(piv_c)
        piv_r += 1

    return RowEchelon(
        rows=tuple(tuple(row) for row in m),
        rhs=tuple(t),
        pivots=tuple(pivots),
        n_cols=n_cols,
    )


def rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    if not matrix:
        return 0
    return rref(matrix).rank


def solve_affine(matrix: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Optional[AffineSolution]:
    """
    Full solution set of matrix * s = rhs, or None when the system is inconsistent.
    Free variables are set to zero in the particular solution.
    """
    echelon = rref(matrix, rhs)
    if not echelon.is_consistent():
        logger.debug(f"Inconsistent system: rank {echelon.rank}, {len(rhs)} equations.")
        return None

    n_cols = echelon.n_cols
    particular = [ZERO] * n_cols
    for r, piv_c in enumerate(echelon.pivots):
        particular[piv_c] = echelon.rhs[r]

    basis = []
    for free_c in echelon.free_columns:
        direction = [ZERO] * n_cols
        direction[free_c] = ONE
        for r, piv_c in enumerate(echelon.pivots):
            direction[piv_c] = -echelon.rows[r][free_c]
        basis.append(tuple(direction))

    return AffineSolution(particular=tuple(particular), nullspace=tuple(basis), rank=echelon.rank)


def nullspace(matrix: Sequence[Sequence[Scalar]]) -> tuple[tuple[Scalar, ...], ...]:
    solution = solve_affine(matrix, [ZERO] * len(matrix))
    return solution.nullspace


def mat_vec(matrix: Sequence[Sequence[Scalar]], vector: Sequence[Scalar]) -> Vector:
    out = []
    for row in matrix:
        total = ZERO
        for a, b in zip(row, vector):
            if a and b:
                total = total + a * b
        out.append(total)
    return out


def transpose(matrix: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(column) for column in zip(*matrix)]


def spans_equal(first: Sequence[Sequence[Scalar]], second: Sequence[Sequence[Scalar]]) -> bool:
    """True when two lists of vectors span the same subspace (mutual containment by rank)."""
    r1, r2 = rank(first), rank(second)
    return r1 == r2 and rank(list(first) + list(second)) == r1
