"""The self-verification suite as a library call."""

import pytest

from dualmds.errors import DomainError
from dualmds.report import CheckResult
from dualmds.verification import run_verification

EXPECTED_CHECKS = {
    "atom_gram_spectrum",
    "biorthogonality",
    "constraint_gram_identity",
    "constraint_singular_values",
    "dual_atom_spectrum",
    "dual_gram_inverse",
    "embedding_round_trip",
    "expansion_equivalence",
    "triangular_decomposition",
}


@pytest.mark.parametrize("n", [3, 4, 5, 8])
def test_every_check_passes(n):
    checks = run_verification(n, seed=0)
    assert all(isinstance(c, CheckResult) for c in checks)
    failed = [c.name for c in checks if not c.passed]
    assert failed == []
    assert EXPECTED_CHECKS <= {c.name for c in checks}


def test_reference_comparison_only_at_four_points():
    names_at_4 = {c.name for c in run_verification(4, seed=0)}
    names_at_5 = {c.name for c in run_verification(5, seed=0)}
    assert "reference_objects" in names_at_4
    assert "reference_objects" not in names_at_5


def test_deterministic_given_seed():
    a = run_verification(5, seed=3)
    b = run_verification(5, seed=3)
    assert [(c.name, c.passed) for c in a] == [(c.name, c.passed) for c in b]


def test_rejects_too_few_points():
    with pytest.raises(DomainError):
        run_verification(2)
