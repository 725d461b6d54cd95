import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

import logging_config  # Ensure logging is configured

# --- Setup Logger ---
logger = logging.getLogger(__name__)

load_dotenv()

# Import project modules
import canonical
import oracle
import solver
import worked_examples
from jordan import EigenPair, residual
from octonion import OctonionParseError, associator, format_octonion, parse_octonion
from scalar import MixedVariantError, ScalarParseError, parse_scalar
from schemas import (
    CanonicalizationModel,
    MatrixModel,
    ParamsModel,
    VectorModel,
    case_to_model,
    containment_to_model,
    cross_validation_to_model,
    float_vector_to_model,
    matrix_from_model,
    matrix_to_model,
    params_from_model,
    residual_to_model,
    solutions_to_model,
    vector_from_model,
    vector_to_model,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INVALID = 2

FLOAT_FORMAT = ".17g"

# Subcommands whose positionals are octonion literals, and the flags they accept.
LITERAL_COMMANDS = ("mul", "assoc")
LITERAL_FLAGS = ("--pretty", "-h", "--help")

# Invalid input or I/O; these map to exit code 2.
INPUT_ERRORS = (
    ScalarParseError,
    OctonionParseError,
    MixedVariantError,
    ValidationError,
    solver.DegenerateVector,
    solver.NotGenericImaginary,
    canonical.QuaternionicInput,
    canonical.NonRationalNorm,
    ZeroDivisionError,
    OSError,
    ValueError,
)

# Definite mathematical negatives; these map to exit code 1.
NEGATIVE_ERRORS = (worked_examples.ExampleMismatch, oracle.OracleError)


class Outcome:
    """A JSON payload or plain text, plus the exit code it implies."""

    def __init__(self, payload, code: int = EXIT_OK):
        self.payload = payload
        self.code = code


def _read_model(path: str, model):
    return model.model_validate_json(Path(path).read_text())


def _read_vector(path: str):
    return vector_from_model(_read_model(path, VectorModel))


def _read_generic_vector(path: str) -> solver.GenericImaginaryVector:
    return solver.GenericImaginaryVector.from_vector(_read_vector(path))


def _dump(model) -> dict:
    return model.model_dump(mode="json", exclude_none=True)


# --- Commands ---

def cmd_mul(args) -> Outcome:
    return Outcome(format_octonion(parse_octonion(args.u) * parse_octonion(args.v)))


def cmd_assoc(args) -> Outcome:
    x, y, z = (parse_octonion(t) for t in (args.x, args.y, args.z))
    return Outcome(format_octonion(associator(x, y, z)))


def _params_from_args(args) -> solver.SolverParams:
    if args.params:
        params = params_from_model(_read_model(args.params, ParamsModel))
    else:
        params = solver.SolverParams()
    overrides = {
        name: parse_scalar(getattr(args, name))
        for name in solver.PARAMETER_NAMES
        if getattr(args, name) is not None
    }
    if overrides:
        values = dict(zip(solver.PARAMETER_NAMES, params.as_tuple()), **overrides)
        params = solver.SolverParams(**values)
    return params


def cmd_construct(args) -> Outcome:
    v = _read_generic_vector(args.vector)
    params = _params_from_args(args)
    A = solver.construct(v, params)
    logger.info(f"Constructed matrix for {v.to_vector()} with parameters {params.as_dict()}")
    return Outcome(_dump(matrix_to_model(A)))


def cmd_verify(args) -> Outcome:
    A = matrix_from_model(_read_model(args.matrix, MatrixModel))
    v = _read_vector(args.vector)
    lam = parse_octonion(args.eigenvalue) if args.eigenvalue else v.associator()
    r = residual(A, EigenPair(v, lam))
    code = EXIT_OK if r.is_zero() else EXIT_NEGATIVE
    return Outcome(_dump(residual_to_model(r, lam)), code)


def cmd_family(args) -> Outcome:
    v = _read_vector(args.vector)
    lam = parse_octonion(args.eigenvalue) if args.eigenvalue else v.associator()
    solutions = oracle.solve(oracle.build_system(v, lam))
    payload = _dump(solutions_to_model(solutions))
    code = EXIT_NEGATIVE if solutions.is_empty else EXIT_OK
    if args.cross_validate:
        report = oracle.cross_validate(solver.GenericImaginaryVector.from_vector(v), args.samples, args.seed)
        payload["cross_validation"] = _dump(cross_validation_to_model(report))
        if not report.passed:
            code = EXIT_NEGATIVE
    return Outcome(payload, code)


def cmd_contains(args) -> Outcome:
    A = matrix_from_model(_read_model(args.matrix, MatrixModel))
    v = _read_vector(args.vector)
    canonicalized = False
    if v.is_imaginary() and not v.is_generic():
        form = canonical.canonicalize_exact(v)
        v, A = form.generic, form.basis.pull_matrix(A)
        canonicalized = True
        logger.info(f"Moved vector into generic form {v} before the containment test.")
    result = solver.contains(solver.GenericImaginaryVector.from_vector(v), A)
    code = EXIT_OK if result.in_family else EXIT_NEGATIVE
    return Outcome(_dump(containment_to_model(result, canonicalized)), code)


def cmd_canonicalize(args) -> Outcome:
    v = _read_vector(args.vector)
    form = canonical.canonicalize(v, args.tol)
    model = CanonicalizationModel(
        transform=form.transform.matrix.tolist(),
        generic=float_vector_to_model(form.generic),
        residual_offgeneric=form.residual_offgeneric,
        automorphism_defect=form.transform.automorphism_defect(),
    )
    if args.rationalize is not None:
        rational, error, flagged = canonical.rationalize_vector(form.generic, args.rationalize)
        model.rational = vector_to_model(rational)
        model.rounding_error = error
        model.poorly_approximated = flagged
    return Outcome(_dump(model))


def cmd_examples(args) -> Outcome:
    which = worked_examples.EXAMPLE_IDS if args.which == "all" else (int(args.which),)
    params = worked_examples.Example1Params(
        parse_scalar(args.p) if args.p is not None else worked_examples.DEFAULT_P,
        parse_scalar(args.q) if args.q is not None else worked_examples.DEFAULT_Q,
        parse_scalar(args.t) if args.t is not None else worked_examples.DEFAULT_T,
    )
    cases = worked_examples.verify_all(which, params)
    if args.table:
        return Outcome(worked_examples.classification_table(cases).to_string(index=False))
    return Outcome({"verified": len(cases), "cases": [_dump(case_to_model(c)) for c in cases]})


# --- Argument parsing ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="Indent JSON output.")

    parser = argparse.ArgumentParser(
        prog="octojordan",
        description="Exact octonion arithmetic and right eigenvectors of 3x3 Hermitian octonionic matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="Multiply two octonions.")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(handler=cmd_mul)

    p = sub.add_parser("assoc", parents=[common], help="Associator [x, y, z] = (xy)z - x(yz).")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p.set_defaults(handler=cmd_assoc)

    p = sub.add_parser("construct", parents=[common], help="Build the family member for a generic vector.")
    p.add_argument("--vector", required=True)
    p.add_argument("--params")
    for name in solver.PARAMETER_NAMES:
        p.add_argument(f"--{name}")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="Residual A v - v lambda.")
    p.add_argument("--matrix", required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--eigenvalue", help="Defaults to the associator of the vector.")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("family", parents=[common], help="Solution set of A v = v lambda by linear algebra.")
    p.add_argument("--vector", required=True)
    p.add_argument("--eigenvalue", help="Defaults to the associator of the vector.")
    p.add_argument("--cross-validate", action="store_true", help="Also compare against the constructed family.")
    p.add_argument("--samples", type=int, default=oracle.ORACLE_SAMPLES)
    p.add_argument("--seed", type=int, default=oracle.ORACLE_SEED)
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("contains", parents=[common], help="Is the matrix in the family of the vector?")
    p.add_argument("--matrix", required=True)
    p.add_argument("--vector", required=True)
    p.set_defaults(handler=cmd_contains)

    p = sub.add_parser("canonicalize", parents=[common], help="Bring a vector into generic form.")
    p.add_argument("--vector", required=True)
    p.add_argument("--tol", type=float, default=canonical.CANONICAL_TOL)
    p.add_argument("--rationalize", type=int, metavar="N", help="Round the generic form to denominators <= N.")
    p.set_defaults(handler=cmd_canonicalize)

    p = sub.add_parser("examples", parents=[common], help="Verify the worked examples.")
    p.add_argument("which", nargs="?", default="all", choices=["1", "2", "3", "all"])
    p.add_argument("--p")
    p.add_argument("--q")
    p.add_argument("--t")
    p.add_argument("--table", action="store_true", help="Print the classification table instead of JSON.")
    p.set_defaults(handler=cmd_examples)

    return parser


def _bracket(items: list[str], opening: str, closing: str, indent: Optional[int], level: int) -> str:
    if not items:
        return opening + closing
    if indent is None:
        return opening + ", ".join(items) + closing
    pad = " " * (indent * (level + 1))
    return f"{opening}\n" + ",\n".join(pad + item for item in items) + "\n" + " " * (indent * level) + closing


def to_json(value, indent: Optional[int] = None, level: int = 0) -> str:
    """json.dumps layout, except that floats carry 17 significant digits."""
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    if isinstance(value, dict):
        items = [f"{json.dumps(str(k))}: {to_json(v, indent, level + 1)}" for k, v in value.items()]
        return _bracket(items, "{", "}", indent, level)
    if isinstance(value, (list, tuple)):
        return _bracket([to_json(v, indent, level + 1) for v in value], "[", "]", indent, level)
    return json.dumps(value)


def _emit(outcome: Outcome, pretty: bool) -> None:
    if isinstance(outcome.payload, str):
        print(outcome.payload)
    else:
        print(to_json(outcome.payload, indent=2 if pretty else None))


def _first_line(e: Exception) -> str:
    if isinstance(e, ValidationError):
        error = e.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        return f"{location}: {error['msg']}" if location else error["msg"]
    text = str(e).strip()
    return text.splitlines()[0] if text else ""


def protect_literals(argv: Sequence[str]) -> list[str]:
    """
    `mul` and `assoc` take octonion literals such as "-kl" that argparse would read as
    options. Their flags are moved to the front and the literals placed after "--".
    """
    argv = list(argv)
    if not argv or argv[0] not in LITERAL_COMMANDS or "--" in argv:
        return argv
    flags = [token for token in argv[1:] if token in LITERAL_FLAGS]
    literals = [token for token in argv[1:] if token not in LITERAL_FLAGS]
    return [argv[0], *flags, "--", *literals]


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(protect_literals(argv))
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK

    try:
        outcome = args.handler(args)
    except NEGATIVE_ERRORS as e:
        logger.debug(f"Command {args.command} found a negative result.", exc_info=True)
        print(f"{type(e).__name__}: {_first_line(e)}", file=sys.stderr)
        return EXIT_NEGATIVE
    except INPUT_ERRORS as e:
        logger.debug(f"Command {args.command} rejected its input.", exc_info=True)
        print(f"{type(e).__name__}: {_first_line(e)}", file=sys.stderr)
        return EXIT_INVALID

    _emit(outcome, args.pretty)
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
