import numpy as np
import pytest

from jordan import EigenPair, OctVector, apply, is_eigenpair, residual
from octonion import E1, I, J, KL, L, Octonion
from oracle import (
    B5_INDEX,
    EXPECTED_NULLITY,
    UNKNOWNS,
    CrossValidationReport,
    OracleError,
    build_system,
    cross_validate,
    random_params,
    solution_matrices,
    solve,
)
from solver import DegenerateVector, GenericImaginaryVector, SolverParams, construct
from strategies import (
    random_fraction,
    random_generic_vector,
    random_jordan_matrix,
    random_octonion,
    random_solver_params,
)

EQUIVALENCE_SAMPLES = 100
NEGATIVE_SAMPLES = 100
LINEARITY_SAMPLES = 100

IJL = GenericImaginaryVector(x2=1, y2=0, y3=1, z2=0, z3=0, z4=0, z8=1)


def test_system_shape():
    system = build_system(OctVector(I, J, L), KL.scale(2))
    assert len(system.matrix) == 24
    assert all(len(row) == 27 for row in system.matrix)
    assert system.rhs == OctVector(I, J, L).right_mul(KL.scale(2)).flatten()
    assert UNKNOWNS[B5_INDEX] == "b5"


def test_ijl_family():
    solutions = solve(build_system(OctVector(I, J, L), KL.scale(2)))
    assert not solutions.is_empty
    assert solutions.nullity == EXPECTED_NULLITY == 6
    assert len(solutions.nullspace_basis) == 6
    assert solutions.particular[B5_INDEX] == 0
    assert all(d[B5_INDEX] == 0 for d in solutions.nullspace_basis)


def test_first_column_must_vanish():
    solutions = solve(build_system(OctVector(E1, Octonion.zero(), Octonion.zero()), Octonion.zero()))
    assert solutions.nullity == 10


def test_real_part_empties_the_family():
    v = OctVector(E1 + I, J, L)
    solutions = solve(build_system(v, v.associator()))
    assert solutions.is_empty
    assert solutions.nullity == 0
    assert solution_matrices(solutions) == []


def test_solution_matrices():
    v = OctVector(I, J, L)
    lam = KL.scale(2)
    particular, *directions = solution_matrices(solve(build_system(v, lam)))
    assert is_eigenpair(particular, EigenPair(v, lam))
    assert len(directions) == 6
    assert all(apply(D, v).is_zero() for D in directions)


def test_membership():
    solutions = solve(build_system(OctVector(I, J, L), KL.scale(2)))
    params = SolverParams(b1=1, b4=2, b7=3, p=4, m=5, n=6)
    assert solutions.contains(construct(IJL, params).coordinates())
    assert not solutions.contains(construct(IJL, params).shift_identity(1).coordinates())


def test_cross_validate_ijl():
    report = cross_validate(IJL, samples=5, seed=1)
    assert report.passed
    assert report.nullity == 6
    assert set(report.checks) == {"nullity", "membership", "b5_vanishes", "same_family"}
    assert report.failures == []


def test_cross_validate_rejects_degenerate():
    with pytest.raises(DegenerateVector):
        cross_validate(GenericImaginaryVector(1, 0, 0, 0, 0, 0, 1))


def test_oracle_equivalence_bulk():
    rng = np.random.default_rng(5)
    for _ in range(EQUIVALENCE_SAMPLES):
        v = random_generic_vector(rng)
        report = cross_validate(v, samples=2, seed=int(rng.integers(1 << 16)))
        assert report.passed, report.failures


def test_real_parts_give_no_solution_bulk():
    rng = np.random.default_rng(9)
    for trial in range(NEGATIVE_SAMPLES):
        v = random_generic_vector(rng).to_vector()
        real_part = Octonion.real(random_fraction(rng, nonzero=True))
        x, y, z = v
        if trial % 3 == 0:
            x = x + real_part
        elif trial % 3 == 1:
            y = y + real_part
        else:
            z = z + real_part
        shifted = OctVector(x, y, z)
        assert not shifted.associator().is_zero()
        assert solve(build_system(shifted, shifted.associator())).is_empty


def test_random_params_are_seeded():
    first = [random_params(np.random.default_rng(3)) for _ in range(2)]
    assert first[0] == first[1]
    assert random_params(np.random.default_rng(3)) != random_params(np.random.default_rng(4))


def test_report_failures():
    report = CrossValidationReport(nullity=5, samples=0, checks={"nullity": True})
    report.fail("nullity", "oracle nullity is 5")
    assert not report.passed
    with pytest.raises(OracleError, match="nullity"):
        report.raise_for_failures()


def test_solutions_satisfy_random_constructions():
    rng = np.random.default_rng(21)
    v = random_generic_vector(rng)
    system = build_system(v.to_vector(), v.associator())
    for _ in range(5):
        assert system.is_satisfied_by(construct(v, random_solver_params(rng)).coordinates())


def test_system_matches_residual_bulk():
    rng = np.random.default_rng(17)
    for _ in range(LINEARITY_SAMPLES):
        pair = EigenPair(OctVector(*(random_octonion(rng) for _ in range(3))), random_octonion(rng))
        system = build_system(pair.vector, pair.eigenvalue)
        A = random_jordan_matrix(rng)
        evaluated = [e - r for e, r in zip(system.evaluate(A.coordinates()), system.rhs)]
        assert evaluated == list(residual(A, pair).flatten())
