"""
The three known families of Jordan matrices with non-real eigenvalues.

Matrices and eigenpairs are read from data/ex{1,2,3}.json, where every entry is a sum of
terms `value * slot [* s | * conj(s)]` with slots 1, p and q. Example 1 parametrizes the
unit octonion s = cos(theta) + kl sin(theta) through a rational t:

    cos(theta) = (1 - t^2) / (1 + t^2),   sin(theta) = 2t / (1 + t^2)

so every case stays exact. Example 2 is computed over Q(sqrt5). Each case checks its own
residual when built.
"""
from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path
from typing import Iterable, Optional, Sequence

import pandas as pd

import logging_config  # Ensure logging is configured
from canonical import canonicalize_exact
from jordan import EigenPair, JordanMatrix, OctVector, is_eigenpair, residual
from octonion import Octonion, parse_octonion
from scalar import ONE, ZERO, Scalar, as_scalar
from schemas import CorpusModel, Expression
from solver import GenericImaginaryVector, SolverParams, contains, imaginary_shift

# --- Setup Logger ---
logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parent / "data"
EXAMPLE_IDS = (1, 2, 3)

DEFAULT_P = ZERO
DEFAULT_Q = ONE
DEFAULT_T = Fraction(1, 2)


class ExampleMismatch(AssertionError):
    """A listed eigenpair does not satisfy A v = v lambda."""


@dataclass(frozen=True)
class ExampleParams:
    p: Scalar = DEFAULT_P
    q: Scalar = DEFAULT_Q

    def __post_init__(self):
        object.__setattr__(self, "p", as_scalar(self.p))
        object.__setattr__(self, "q", as_scalar(self.q))


@dataclass(frozen=True)
class Example1Params(ExampleParams):
    """p, q and the rational point t on the unit circle; theta itself never appears."""

    t: Fraction = DEFAULT_T

    def __post_init__(self):
        super().__post_init__()
        t = as_scalar(self.t)
        if not isinstance(t, Fraction):
            raise ValueError(f"t must be rational, got {t}")
        object.__setattr__(self, "t", t)

    @property
    def cos(self) -> Fraction:
        return (1 - self.t**2) / (1 + self.t**2)

    @property
    def sin(self) -> Fraction:
        return 2 * self.t / (1 + self.t**2)

    @property
    def s(self) -> Octonion:
        return Octonion((self.cos, ZERO, ZERO, ZERO, self.sin))


@dataclass(frozen=True)
class ExampleCase:
    """One listed eigenpair; construction fails unless the residual is exactly zero."""

    id: str
    example: int
    matrix: JordanMatrix
    pair: EigenPair
    tail: str = "1"

    def __post_init__(self):
        if not is_eigenpair(self.matrix, self.pair):
            raise ExampleMismatch(f"{self.id}: residual {residual(self.matrix, self.pair)} is not zero")

    @property
    def label(self) -> str:
        return self.id.split(".", 1)[1]


# --- Corpus loading ---

@cache
def load_corpus(which: int) -> CorpusModel:
    if which not in EXAMPLE_IDS:
        raise ValueError(f"unknown example {which}; expected one of {EXAMPLE_IDS}")
    path = DATA_DIR / f"ex{which}.json"
    logger.debug(f"Loading example corpus from {path}")
    return CorpusModel.model_validate_json(path.read_text())


def _default_params(which: int) -> ExampleParams:
    return Example1Params() if which == 1 else ExampleParams()


def _coerce_params(which: int, params: Optional[ExampleParams]) -> ExampleParams:
    if params is None:
        return _default_params(which)
    if which == 1 and not isinstance(params, Example1Params):
        return Example1Params(params.p, params.q)
    return params


def evaluate(expression: Expression, params: ExampleParams, quadext: bool = False) -> Octonion:
    slots = {"1": ONE, "p": params.p, "q": params.q}
    total = Octonion.zero()
    for term in expression:
        value = parse_octonion(term.value).scale(slots[term.slot])
        if term.times is not None:
            if not isinstance(params, Example1Params):
                raise ValueError("terms with s need Example 1 parameters")
            value = value * (params.s if term.times == "s" else params.s.conj())
        total = total + value
    return total.to_quadext() if quadext else total


@dataclass(frozen=True)
class _Listed:
    id: str
    family: str
    tail: str
    vector: OctVector
    eigenvalue: Octonion


def _assemble(which: int, params: ExampleParams) -> tuple[JordanMatrix, list[_Listed], dict[str, list[_Listed]]]:
    corpus = load_corpus(which)
    quadext = corpus.field == "quadext"

    def ev(expression: Expression) -> Octonion:
        return evaluate(expression, params, quadext)

    M = corpus.matrix
    matrix = JordanMatrix(ev(M.p).re(), ev(M.m).re(), ev(M.n).re(), ev(M.a), ev(M.b), ev(M.c))

    listed, families = [], {}
    for family in corpus.eigenpairs:
        base = OctVector(ev(family.vector.x), ev(family.vector.y), ev(family.vector.z))
        for branch in family.branches:
            tail = parse_octonion(branch.tail)
            entry = _Listed(
                id=f"ex{which}.{branch.label}",
                family=family.family,
                tail=branch.tail,
                vector=base.right_mul(tail),
                eigenvalue=ev(branch.eigenvalue),
            )
            listed.append(entry)
            families.setdefault(family.family, []).append(entry)
    return matrix, listed, families


def build_example(which: int, params: Optional[ExampleParams] = None) -> list[ExampleCase]:
    """Every listed eigenpair of the example, each verified exactly."""
    params = _coerce_params(which, params)
    matrix, listed, _ = _assemble(which, params)
    cases = [
        ExampleCase(id=e.id, example=which, matrix=matrix, pair=EigenPair(e.vector, e.eigenvalue), tail=e.tail)
        for e in listed
    ]
    logger.info(f"Example {which}: verified {len(cases)} eigenpairs.")
    return cases


def build_all(params: Optional[ExampleParams] = None) -> list[ExampleCase]:
    return [case for which in EXAMPLE_IDS for case in build_example(which, params)]


async def verify_examples(which: Sequence[int] = EXAMPLE_IDS, params: Optional[ExampleParams] = None) -> list[ExampleCase]:
    """Builds the requested examples concurrently; any mismatch propagates."""
    tasks = [asyncio.to_thread(build_example, w, params) for w in which]
    results = await asyncio.gather(*tasks)
    return [case for cases in results for case in cases]


def verify_all(which: Sequence[int] = EXAMPLE_IDS, params: Optional[ExampleParams] = None) -> list[ExampleCase]:
    return asyncio.run(verify_examples(which, params))


# --- Classification ---

@dataclass(frozen=True)
class CaseClassification:
    id: str
    real_part_zero: bool
    associator_zero: bool
    associator_parallel_kl: bool
    imaginary_after_shift: bool
    generic: bool
    eligible: bool


def classify_case(case: ExampleCase) -> CaseClassification:
    v, lam = case.pair.vector, case.pair.eigenvalue
    assoc = v.associator()
    shifted, lam_im = imaginary_shift(case.matrix, lam)
    real_part_zero = v.is_imaginary()
    associator_zero = assoc.is_zero()
    return CaseClassification(
        id=case.id,
        real_part_zero=real_part_zero,
        associator_zero=associator_zero,
        associator_parallel_kl=assoc.support() <= {5},
        imaginary_after_shift=lam_im.is_imaginary() and is_eigenpair(shifted, EigenPair(v, lam_im)),
        generic=v.is_generic(),
        eligible=real_part_zero and not associator_zero,
    )


def classification_table(cases: Iterable[ExampleCase]) -> pd.DataFrame:
    records = [classify_case(case).__dict__ for case in cases]
    columns = list(CaseClassification.__dataclass_fields__)
    return pd.DataFrame.from_records(records, columns=columns)


# --- Example 1: tails, associator eigenvalues and containment ---

@dataclass(frozen=True)
class TailReading:
    id: str
    tail: str
    paired_residual_zero: bool
    crossed_residual_zero: bool


def tail_readings(params: Optional[Example1Params] = None) -> list[TailReading]:
    """
    The eigenvectors of Example 1 carry a right factor S = -kl (upper sign) or S = 1 (lower
    sign). The paired reading gives S = -kl the upper eigenvalue; the crossed reading swaps
    the two eigenvalues within each family. Both are evaluated.
    """
    params = _coerce_params(1, params)
    matrix, _, families = _assemble(1, params)
    readings = []
    for members in families.values():
        eigenvalues = [e.eigenvalue for e in members]
        for entry, crossed in zip(members, reversed(eigenvalues)):
            readings.append(
                TailReading(
                    id=entry.id,
                    tail=entry.tail,
                    paired_residual_zero=is_eigenpair(matrix, EigenPair(entry.vector, entry.eigenvalue)),
                    crossed_residual_zero=is_eigenpair(matrix, EigenPair(entry.vector, crossed)),
                )
            )
    for reading in readings:
        if not reading.paired_residual_zero:
            logger.warning(f"{reading.id}: paired tail reading fails")
    return readings


def _example1_entry(case_id: str, t: Scalar) -> _Listed:
    label = case_id.split(".", 1)[-1]
    _, listed, _ = _assemble(1, Example1Params(ZERO, ONE, t))
    for entry in listed:
        if entry.id == f"ex1.{label}":
            return entry
    raise ValueError(f"unknown Example 1 eigenpair {case_id!r}")


def associator_parameters(case_id: str, t: Scalar = DEFAULT_T) -> tuple[Scalar, Scalar]:
    """
    (p, q) for which the listed eigenvalue of an Example 1 eigenvector equals the
    vector's associator. The eigenvalue is p + q L, with L read off at p = 0, q = 1.
    """
    entry = _example1_entry(case_id, t)
    assoc = entry.vector.associator()
    if assoc.is_zero():
        raise ValueError(f"{entry.id}: associator vanishes")
    if not assoc.support() <= {5}:
        raise ValueError(f"{entry.id}: associator {assoc} is not a multiple of kl")
    L = entry.eigenvalue
    if not L[5]:
        raise ValueError(f"{entry.id}: eigenvalue has no kl part at t = {t}")
    q = assoc[5] / L[5]
    p = -q * L[1]
    return p, q


@dataclass(frozen=True)
class Example1Containment:
    id: str
    p: Scalar
    q: Scalar
    generic: OctVector
    in_family: bool
    params: Optional[SolverParams]


def example1_containment(case_id: str, t: Scalar = DEFAULT_T) -> Example1Containment:
    """
    Chooses (p, q) so that lambda = [v], moves v into generic form by an exact Cayley basis,
    pulls A_1 back along the same automorphism and decides membership in the family.
    """
    p, q = associator_parameters(case_id, t)
    label = case_id.split(".", 1)[-1]
    case = next(c for c in build_example(1, Example1Params(p, q, t)) if c.label == label)
    form = canonicalize_exact(case.pair.vector)
    matrix = form.basis.pull_matrix(case.matrix)
    vector = GenericImaginaryVector.from_vector(form.generic)
    result = contains(vector, matrix)
    logger.info(f"{case.id}: p={p}, q={q}, in family: {result.in_family}")
    return Example1Containment(
        id=case.id,
        p=p,
        q=q,
        generic=form.generic,
        in_family=result.in_family,
        params=result.params,
    )
