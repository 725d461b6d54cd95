from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordan import (
    COORDINATE_NAMES,
    DIMENSION,
    EigenPair,
    JordanMatrix,
    OctVector,
    apply,
    is_eigenpair,
    residual,
    shift_identity,
)
from octonion import E1, I, J, K, KL, L, Octonion, parse_octonion
from scalar import MixedVariantError
from strategies import octonions, rationals

jordan_matrices = st.builds(JordanMatrix, rationals, rationals, rationals, octonions, octonions, octonions)
vectors = st.builds(OctVector, octonions, octonions, octonions)


def example3_matrix(p=0, q=1) -> JordanMatrix:
    return JordanMatrix(
        p, p, p,
        I.scale(q),
        parse_octonion("1+k+l").scale(q),
        parse_octonion("j-il-jl").scale(q),
    )


def test_coordinate_names():
    assert DIMENSION == 27
    assert COORDINATE_NAMES[:4] == ("p", "m", "n", "a1")
    assert COORDINATE_NAMES.index("b5") == 15
    assert COORDINATE_NAMES[-1] == "c8"


@given(jordan_matrices)
def test_hermitian_by_construction(A):
    for r in range(1, 4):
        assert A.entry(r, r).is_real()
        for s in range(1, 4):
            assert A.entry(s, r) == A.entry(r, s).conj()


@given(jordan_matrices)
def test_coordinates_round_trip(A):
    assert JordanMatrix.from_coordinates(A.coordinates()) == A


def test_basis_matrices():
    assert JordanMatrix.basis(0) == JordanMatrix(p=1)
    assert JordanMatrix.basis(15).b == KL
    with pytest.raises(ValueError):
        JordanMatrix.from_coordinates([0] * 26)


@given(vectors)
def test_identity_fixes_vectors(v):
    assert JordanMatrix.identity() @ v == v
    assert apply(JordanMatrix.zero(), v).is_zero()


@given(jordan_matrices, jordan_matrices, vectors, rationals)
def test_apply_is_linear_in_the_matrix(A, B, v, t):
    assert apply(A + B.scale(t), v) == apply(A, v) + apply(B, v).scale(t)


def test_example3_eigenpair():
    v = OctVector(J, L, Octonion.zero())
    assert is_eigenpair(example3_matrix(), EigenPair(v, -KL))
    assert is_eigenpair(example3_matrix(2, 3), EigenPair(v, E1.scale(2) - KL.scale(3)))
    assert not is_eigenpair(example3_matrix(), EigenPair(v, KL))


def test_residual_of_diagonal_matrix():
    A = JordanMatrix(1, 2, 3)
    v = OctVector(I, Octonion.zero(), Octonion.zero())
    assert residual(A, EigenPair(v, E1)).is_zero()
    assert residual(A, EigenPair(v, E1.scale(2))) == OctVector(-I, Octonion.zero(), Octonion.zero())


@given(rationals)
def test_shift_identity_moves_eigenvalue(t):
    v = OctVector(J, L, Octonion.zero())
    shifted = shift_identity(example3_matrix(), t)
    assert shifted == example3_matrix().shift_identity(t)
    assert is_eigenpair(shifted, EigenPair(v, Octonion.real(t) - KL))


def test_vector_predicates():
    v = OctVector(I, J, L)
    assert v.associator() == KL.scale(2)
    assert v.is_imaginary() and v.is_generic()
    assert not OctVector(J, I, L).is_generic()
    assert not OctVector(E1 + I, J, L).is_imaginary()
    assert OctVector(E1 + I, J, L).is_generic()
    assert OctVector(I, J, K + L).is_generic()
    assert OctVector.zero().is_zero()


def test_vector_operations():
    v = OctVector(I, J, L)
    assert v.right_mul(L) == OctVector(I * L, J * L, -E1)
    assert v.scale(Fraction(1, 2)) + v.scale(Fraction(1, 2)) == v
    assert v - v == OctVector.zero()
    assert -v == v.scale(-1)
    assert len(v.flatten()) == 24
    assert v.flatten()[1] == 1 and v.flatten()[10] == 1 and v.flatten()[23] == 1
    assert v.re() == (0, 0, 0)
    assert str(v) == "(i, j, l)"


def test_floats_are_rejected():
    with pytest.raises(MixedVariantError):
        JordanMatrix(0.5, 0, 0)


@given(jordan_matrices, vectors, vectors, rationals)
def test_apply_is_linear_in_the_vector(A, v, w, s):
    assert apply(A, v.scale(s)) == apply(A, v).scale(s)
    assert apply(A, v + w) == apply(A, v) + apply(A, w)
