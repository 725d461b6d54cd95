import importlib

import pytest

MODULES = [
    "logging_config",
    "scalar",
    "octonion",
    "jordan",
    "linalg",
    "solver",
    "oracle",
    "canonical",
    "schemas",
    "worked_examples",
    "main",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_imports(name):
    assert importlib.import_module(name).__name__ == name


def test_octonion_operations_keep_their_names():
    octonion = importlib.import_module("octonion")
    w = octonion.parse_octonion("3-kl")
    assert octonion.re(w) == 3
    assert octonion.im(w) == octonion.parse_octonion("-kl")
    assert octonion.conj(w) == octonion.parse_octonion("3+kl")
    assert octonion.norm_sq(w) == 10
