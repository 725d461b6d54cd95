from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given

from canonical import (
    BasisTransform,
    CayleyBasis,
    FloatOctonion,
    NonRationalNorm,
    QuaternionicInput,
    as_float_vector,
    canonicalize,
    canonicalize_exact,
    cayley_basis,
    exact_sqrt,
    float_associator,
    offgeneric_residual,
    rationalize_vector,
    round_scalar,
    round_to_rational,
    structure_tensor,
)
from jordan import EigenPair, OctVector, is_eigenpair
from octonion import E1, I, IL, J, JL, K, KL, L, Octonion
from scalar import SQRT5, QuadExt
from solver import GenericImaginaryVector, SolverParams, construct
from strategies import octonions, random_generic_vector

SCRAMBLE_SAMPLES = 100
TOL = 1e-9

# Cayley triples whose bases generate a group of exact automorphisms.
GENERATORS = (
    CayleyBasis.from_triple(J, K, L),
    CayleyBasis.from_triple(I, J, -L),
    CayleyBasis.from_triple(I, L, J),
)


def random_automorphism(rng: np.random.Generator) -> CayleyBasis:
    basis = CayleyBasis.identity()
    for _ in range(int(rng.integers(1, 7))):
        basis = GENERATORS[int(rng.integers(len(GENERATORS)))].compose(basis)
    return basis


# --- Float mirror of the algebra ---

def test_structure_tensor():
    T = structure_tensor()
    assert T.shape == (8, 8, 8)
    assert not T.flags.writeable
    assert np.all(np.abs(T).sum(axis=2) == 1)


@given(octonions, octonions)
def test_float_product_matches_exact(x, y):
    expected = FloatOctonion.from_octonion(x * y).coeffs
    product = (FloatOctonion.from_octonion(x) * FloatOctonion.from_octonion(y)).coeffs
    assert np.allclose(product, expected, rtol=0, atol=1e-9)


def test_float_associator_anchor():
    i, j, l = (FloatOctonion.unit(n) for n in (2, 3, 8))
    assert np.array_equal(float_associator(i, j, l).coeffs, 2 * FloatOctonion.unit(5).coeffs)


def test_as_float_vector():
    x, y, z = as_float_vector(OctVector(I, J.scale(QuadExt(0, 1)), L))
    assert y.coeffs[2] == pytest.approx(np.sqrt(5))
    with pytest.raises(ValueError):
        as_float_vector([np.zeros(8), np.zeros(8)])


# --- Cayley bases ---

def test_cayley_basis_of_standard_triple():
    assert cayley_basis(I, J, L) == (E1, I, J, K, KL, JL, IL, L)


@pytest.mark.parametrize("basis", GENERATORS)
def test_generators_are_automorphisms(basis):
    assert basis.is_automorphism()
    assert basis.to_transform().is_automorphism()


def test_swapping_units_is_not_an_automorphism():
    images = list(CayleyBasis.identity().images)
    images[1], images[2] = images[2], images[1]
    swapped = CayleyBasis(tuple(images))
    assert not swapped.is_automorphism()
    assert not swapped.to_transform().is_automorphism()


@given(octonions, octonions)
def test_automorphism_respects_products(x, y):
    basis = GENERATORS[0].compose(GENERATORS[2])
    assert basis.push_forward(x * y) == basis.push_forward(x) * basis.push_forward(y)
    assert basis.pull_back(basis.push_forward(x)) == x


def test_push_and_pull_eigenpairs():
    v = GenericImaginaryVector(1, 2, 3, 4, 5, 6, 7)
    A = construct(v, SolverParams(b1=1, p=2))
    basis = random_automorphism(np.random.default_rng(0))
    pushed = EigenPair(basis.push_vector(v.to_vector()), basis.push_forward(v.associator()))
    assert is_eigenpair(basis.push_matrix(A), pushed)
    assert basis.pull_matrix(basis.push_matrix(A)) == A


def test_basis_transform_identity():
    transform = BasisTransform.identity()
    assert transform.is_automorphism()
    assert transform.orthogonality_defect() == 0
    w = FloatOctonion.unit(4)
    assert np.array_equal(transform.inverse().apply(transform.pull_back(w)).coeffs, w.coeffs)


# --- Floating-point canonicalization ---

def test_canonicalize_generic_vector_is_identity():
    form = canonicalize(OctVector(I, J, L))
    assert np.allclose(form.transform.matrix, np.eye(8))
    assert form.residual_offgeneric == 0


def test_canonicalize_scrambled_units():
    form = canonicalize(OctVector(J, K, L))
    assert form.residual_offgeneric < TOL
    assert np.allclose([w.coeffs for w in form.generic], [w.coeffs for w in as_float_vector(OctVector(I, J, L))])


def test_canonicalize_rejects_quaternionic_triples():
    with pytest.raises(QuaternionicInput):
        canonicalize(OctVector(I, J, K))
    with pytest.raises(QuaternionicInput):
        canonicalize(OctVector(I, J, K.scale(2) + E1))


def test_canonicalize_scrambled_bulk():
    rng = np.random.default_rng(17)
    for _ in range(SCRAMBLE_SAMPLES):
        v = random_generic_vector(rng, bound=5).to_vector()
        scrambled = random_automorphism(rng).push_vector(v)
        form = canonicalize(scrambled)
        original = float_associator(*as_float_vector(scrambled)).norm()
        recovered = float_associator(*form.generic).norm()
        assert form.residual_offgeneric < TOL
        assert form.transform.automorphism_defect() < TOL
        assert form.transform.orthogonality_defect() < TOL
        assert abs(original - recovered) <= TOL * max(1.0, original)
        images = [form.transform.apply(w).coeffs for w in form.generic]
        assert np.allclose(images, [w.coeffs for w in as_float_vector(scrambled)], atol=TOL)
        assert all(form.generic[k].coeffs[n] > 0 for k, n in ((0, 1), (1, 2), (2, 7)))


def test_offgeneric_residual():
    components = [np.zeros(8), np.zeros(8), np.zeros(8)]
    components[0][2] = 0.25
    components[2][4] = -0.5
    assert offgeneric_residual(components) == 0.5


# --- Rational rounding ---

def test_round_scalar():
    assert round_scalar(0.5, 10) == (Fraction(1, 2), 0.0)
    approximation, error = round_scalar(np.pi, 1000)
    assert approximation == Fraction(355, 113)
    assert error < 1e-6


def test_round_to_rational_flags_sqrt5():
    coeffs = np.zeros(8)
    coeffs[0] = np.sqrt(5)
    rounded = round_to_rational(coeffs, max_denominator=100)
    assert rounded.poorly_approximated
    assert rounded.value == Octonion.real(Fraction(161, 72))
    assert not round_to_rational(FloatOctonion(coeffs), max_denominator=10**9).poorly_approximated


def test_rationalize_generic_form():
    form = canonicalize(OctVector(J, K, L))
    vector, error, flagged = rationalize_vector(form.generic, 100)
    assert vector == OctVector(I, J, L)
    assert error < 1e-12
    assert not flagged


# --- Exact canonicalization ---

def test_exact_sqrt():
    assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert exact_sqrt(QuadExt(4, 0)) == 2
    assert exact_sqrt(0) == 0
    for value in (2, -1, SQRT5):
        with pytest.raises(NonRationalNorm):
            exact_sqrt(value)


def test_canonicalize_exact_example1_vector():
    # w- of Example 1 at t = 1/2, where s = 3/5 + 4/5 kl.
    C, S = Fraction(3, 5), Fraction(4, 5)
    v = OctVector(J, K.scale(-C) + L.scale(S), I)
    form = canonicalize_exact(v)
    assert form.basis.is_automorphism()
    assert form.basis.images[1] == J
    assert form.basis.images[2] == K.scale(-C) + L.scale(S)
    assert form.basis.images[7] == I.scale(S) + JL.scale(C)
    assert form.generic == OctVector(I, J, K.scale(-C) + L.scale(S))
    assert form.basis.push_vector(form.generic) == v


def test_canonicalize_exact_errors():
    with pytest.raises(QuaternionicInput):
        canonicalize_exact(OctVector(I, J, K))
    with pytest.raises(NonRationalNorm):
        canonicalize_exact(OctVector(I + J, K, L))


def test_exact_and_float_canonicalization_agree():
    rng = np.random.default_rng(3)
    for _ in range(10):
        v = GenericImaginaryVector(2, 0, 3, 0, 0, 0, int(rng.integers(1, 5))).to_vector()
        scrambled = random_automorphism(rng).push_vector(v)
        exact = canonicalize_exact(scrambled)
        approx = canonicalize(scrambled)
        assert exact.generic == v
        assert np.allclose(exact.basis.to_transform().matrix, approx.transform.matrix, atol=TOL)
