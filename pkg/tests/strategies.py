"""Hypothesis strategies and seeded numpy samplers shared by the test modules."""
from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from jordan import JordanMatrix
from octonion import Octonion
from scalar import QuadExt
from solver import GenericImaginaryVector, SolverParams

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
nonzero_rationals = rationals.filter(lambda r: r != 0)
quadexts = st.builds(QuadExt, rationals, rationals)
nonzero_quadexts = quadexts.filter(bool)

octonions = st.lists(rationals, min_size=8, max_size=8).map(Octonion)
quadext_octonions = st.lists(quadexts, min_size=8, max_size=8).map(Octonion)
quaternions = st.lists(rationals, min_size=4, max_size=4).map(Octonion)

generic_vectors = st.builds(
    GenericImaginaryVector,
    x2=nonzero_rationals,
    y2=rationals,
    y3=nonzero_rationals,
    z2=rationals,
    z3=rationals,
    z4=rationals,
    z8=nonzero_rationals,
)

solver_params = st.builds(SolverParams, rationals, rationals, rationals, rationals, rationals, rationals)


# --- Seeded samplers for the bulk checks ---

def random_fraction(rng: np.random.Generator, bound: int = 10, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
        if value or not nonzero:
            return value


def random_octonion(rng: np.random.Generator, bound: int = 10) -> Octonion:
    return Octonion(random_fraction(rng, bound) for _ in range(8))


def random_generic_vector(rng: np.random.Generator, bound: int = 10) -> GenericImaginaryVector:
    return GenericImaginaryVector(
        x2=random_fraction(rng, bound, nonzero=True),
        y2=random_fraction(rng, bound),
        y3=random_fraction(rng, bound, nonzero=True),
        z2=random_fraction(rng, bound),
        z3=random_fraction(rng, bound),
        z4=random_fraction(rng, bound),
        z8=random_fraction(rng, bound, nonzero=True),
    )


def random_solver_params(rng: np.random.Generator, bound: int = 10) -> SolverParams:
    return SolverParams.from_sequence([random_fraction(rng, bound) for _ in range(6)])


def random_quadext(rng: np.random.Generator, bound: int = 10) -> QuadExt:
    return QuadExt(random_fraction(rng, bound), random_fraction(rng, bound))


def random_jordan_matrix(rng: np.random.Generator, bound: int = 10) -> JordanMatrix:
    p, m, n = (random_fraction(rng, bound) for _ in range(3))
    return JordanMatrix(p, m, n, *(random_octonion(rng, bound) for _ in range(3)))
