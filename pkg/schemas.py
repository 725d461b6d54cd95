"""
JSON forms of the domain objects, as pydantic models, with converters next to them.

Scalars travel as text ("3", "-1/2", "1/2+3/4*sqrt5"). An octonion is either a literal in
the octonion text grammar ("1+sqrt5*kl") or {"coeffs": [s1, ..., s8]} in basis order.
"""
from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field, field_validator

from jordan import JordanMatrix, OctVector
from octonion import Octonion, format_octonion, parse_octonion
from scalar import format_scalar, parse_scalar
from solver import PARAMETER_NAMES, ContainmentResult, SolverParams


def _scalar_text(value):
    # JSON integers are accepted wherever a scalar literal is expected.
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return value


class OctonionModel(BaseModel):
    coeffs: list[str] = Field(min_length=8, max_length=8)

    @field_validator("coeffs", mode="before")
    @classmethod
    def _ints_as_text(cls, value):
        if isinstance(value, list):
            return [_scalar_text(v) for v in value]
        return value


OctonionField = Union[str, OctonionModel]


class VectorModel(BaseModel):
    x: OctonionField
    y: OctonionField
    z: OctonionField


class MatrixModel(BaseModel):
    p: str
    m: str
    n: str
    a: OctonionField
    b: OctonionField
    c: OctonionField

    @field_validator("p", "m", "n", mode="before")
    @classmethod
    def _ints_as_text(cls, value):
        return _scalar_text(value)


class ParamsModel(BaseModel):
    b1: str = "0"
    b4: str = "0"
    b7: str = "0"
    p: str = "0"
    m: str = "0"
    n: str = "0"

    @field_validator("*", mode="before")
    @classmethod
    def _ints_as_text(cls, value):
        return _scalar_text(value)


class ResidualModel(BaseModel):
    residual: VectorModel
    eigenvalue: str
    zero: bool


class OracleReportModel(BaseModel):
    status: Literal["empty", "nonempty"]
    nullity: int
    particular: Optional[list[str]] = None
    basis: list[list[str]] = []


class CrossValidationModel(BaseModel):
    nullity: int
    samples: int
    checks: dict[str, bool]
    failures: list[str]
    passed: bool


class ContainmentModel(BaseModel):
    in_family: bool
    params: Optional[ParamsModel] = None
    canonicalized: bool = False


class FloatVectorModel(BaseModel):
    x: list[float]
    y: list[float]
    z: list[float]


class CanonicalizationModel(BaseModel):
    transform: list[list[float]]
    generic: FloatVectorModel
    residual_offgeneric: float
    automorphism_defect: float
    rational: Optional[VectorModel] = None
    rounding_error: Optional[float] = None
    poorly_approximated: Optional[bool] = None


# --- Example corpus files ---

class TermModel(BaseModel):
    """value * slot, optionally right-multiplied by s or conj(s)."""

    value: str
    slot: Literal["1", "p", "q"] = "1"
    times: Optional[Literal["s", "sbar"]] = None


Expression = list[TermModel]


class ParametricVectorModel(BaseModel):
    x: Expression = []
    y: Expression = []
    z: Expression = []


class ParametricMatrixModel(BaseModel):
    p: Expression
    m: Expression
    n: Expression
    a: Expression = []
    b: Expression = []
    c: Expression = []


class BranchModel(BaseModel):
    label: str
    tail: str = "1"
    eigenvalue: Expression


class EigenFamilyModel(BaseModel):
    family: str
    vector: ParametricVectorModel
    branches: list[BranchModel]


class CorpusModel(BaseModel):
    example: int
    description: str = ""
    field: Literal["rational", "quadext"] = "rational"
    matrix: ParametricMatrixModel
    eigenpairs: list[EigenFamilyModel]


class ExampleCaseModel(BaseModel):
    id: str
    matrix: MatrixModel
    vector: VectorModel
    eigenvalue: str
    tail: str


# --- Converters ---

def octonion_from_model(model: OctonionField) -> Octonion:
    if isinstance(model, str):
        return parse_octonion(model)
    return Octonion(parse_scalar(c) for c in model.coeffs)


def octonion_to_model(w: Octonion) -> OctonionModel:
    return OctonionModel(coeffs=[format_scalar(c) for c in w.coeffs])


def vector_from_model(model: VectorModel) -> OctVector:
    return OctVector(*(octonion_from_model(getattr(model, name)) for name in ("x", "y", "z")))


def vector_to_model(v: OctVector) -> VectorModel:
    return VectorModel(x=octonion_to_model(v.x), y=octonion_to_model(v.y), z=octonion_to_model(v.z))


def matrix_from_model(model: MatrixModel) -> JordanMatrix:
    return JordanMatrix(
        parse_scalar(model.p),
        parse_scalar(model.m),
        parse_scalar(model.n),
        octonion_from_model(model.a),
        octonion_from_model(model.b),
        octonion_from_model(model.c),
    )


def matrix_to_model(A: JordanMatrix) -> MatrixModel:
    return MatrixModel(
        p=format_scalar(A.p),
        m=format_scalar(A.m),
        n=format_scalar(A.n),
        a=octonion_to_model(A.a),
        b=octonion_to_model(A.b),
        c=octonion_to_model(A.c),
    )


def params_from_model(model: ParamsModel) -> SolverParams:
    return SolverParams(**{name: parse_scalar(getattr(model, name)) for name in PARAMETER_NAMES})


def params_to_model(params: SolverParams) -> ParamsModel:
    return ParamsModel(**params.as_dict())


def scalars_to_text(values) -> list[str]:
    return [format_scalar(s) for s in values]


def solutions_to_model(solutions) -> OracleReportModel:
    """From an oracle.AffineSolutionSet."""
    if solutions.is_empty:
        return OracleReportModel(status="empty", nullity=0)
    return OracleReportModel(
        status="nonempty",
        nullity=solutions.nullity,
        particular=scalars_to_text(solutions.particular),
        basis=[scalars_to_text(d) for d in solutions.nullspace_basis],
    )


def cross_validation_to_model(report) -> CrossValidationModel:
    return CrossValidationModel(
        nullity=report.nullity,
        samples=report.samples,
        checks=dict(report.checks),
        failures=list(report.failures),
        passed=report.passed,
    )


def containment_to_model(result: ContainmentResult, canonicalized: bool = False) -> ContainmentModel:
    return ContainmentModel(
        in_family=result.in_family,
        params=params_to_model(result.params) if result.params is not None else None,
        canonicalized=canonicalized,
    )


def float_vector_to_model(vector) -> FloatVectorModel:
    x, y, z = ([float(c) for c in w.coeffs] for w in vector)
    return FloatVectorModel(x=x, y=y, z=z)


def case_to_model(case) -> ExampleCaseModel:
    """From a worked_examples.ExampleCase."""
    return ExampleCaseModel(
        id=case.id,
        matrix=matrix_to_model(case.matrix),
        vector=vector_to_model(case.pair.vector),
        eigenvalue=format_octonion(case.pair.eigenvalue),
        tail=case.tail,
    )


def residual_to_model(residual: OctVector, eigenvalue: Octonion) -> ResidualModel:
    return ResidualModel(
        residual=vector_to_model(residual),
        eigenvalue=format_octonion(eigenvalue),
        zero=residual.is_zero(),
    )
