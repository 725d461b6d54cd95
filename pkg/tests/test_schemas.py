from fractions import Fraction

import pytest
from pydantic import ValidationError

from jordan import JordanMatrix, OctVector
from octonion import I, J, KL, L, Octonion
from scalar import QuadExt
from schemas import (
    CorpusModel,
    MatrixModel,
    OctonionModel,
    ParamsModel,
    VectorModel,
    matrix_from_model,
    matrix_to_model,
    octonion_from_model,
    octonion_to_model,
    params_from_model,
    solutions_to_model,
    vector_from_model,
    vector_to_model,
)
from oracle import build_system, solve
from solver import SolverParams


def test_octonion_forms():
    assert octonion_from_model("1+sqrt5*kl") == Octonion.real(1) + KL.scale(QuadExt(0, 1))
    model = OctonionModel(coeffs=[0, 1, "1/2", 0, 0, 0, 0, "sqrt5"])
    assert model.coeffs[1] == "1"
    assert octonion_from_model(model) == I + J.scale(Fraction(1, 2)) + L.scale(QuadExt(0, 1))
    assert octonion_to_model(KL.scale(2)).coeffs == ["0", "0", "0", "0", "2", "0", "0", "0"]


def test_octonion_model_needs_eight_coefficients():
    with pytest.raises(ValidationError):
        OctonionModel(coeffs=["1", "2"])


def test_vector_and_matrix_models():
    v = vector_from_model(VectorModel.model_validate({"x": "i", "y": "j", "z": "l"}))
    assert v == OctVector(I, J, L)
    assert vector_from_model(vector_to_model(v)) == v

    A = matrix_from_model(MatrixModel.model_validate({"p": 1, "m": "1/2", "n": "sqrt5", "a": "i", "b": "0", "c": "kl"}))
    assert A == JordanMatrix(1, Fraction(1, 2), QuadExt(0, 1), I, Octonion.zero(), KL)
    assert matrix_from_model(matrix_to_model(A)) == A


def test_matrix_model_rejects_missing_fields():
    with pytest.raises(ValidationError):
        MatrixModel.model_validate({"p": 1, "m": 1, "n": 1})


def test_params_model_defaults():
    params = params_from_model(ParamsModel.model_validate({"p": 2, "b7": "-1/3"}))
    assert params.as_dict() == SolverParams(p=2, b7="-1/3").as_dict()
    assert params.m == 0


def test_solutions_model():
    report = solutions_to_model(solve(build_system(OctVector(I, J, L), KL.scale(2))))
    assert report.status == "nonempty"
    assert report.nullity == len(report.basis) == 6
    assert len(report.particular) == 27


def test_corpus_model_rejects_unknown_slot():
    corpus = {
        "example": 9,
        "matrix": {"p": [{"value": "1", "slot": "r"}], "m": [], "n": []},
        "eigenpairs": [],
    }
    with pytest.raises(ValidationError):
        CorpusModel.model_validate(corpus)
