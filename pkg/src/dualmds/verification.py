"""The self-verification suite behind ``dualmds verify``.

Every closed-form statement the package relies on is checked here at a
chosen size n: the four-point golden objects, the atom-Gram spectrum,
the triangular-graph decomposition, biorthogonality, the dual atoms'
two-eigenvalue structure, the assembled dual Gram being the inverse,
agreement of the two Gram-matrix routes, embedding round trips, and the
constraint-matrix identity with its singular spectrum.
"""

from __future__ import annotations

import numpy as np

from . import _reference
from .basis import (
    basis_atom,
    basis_gram,
    dual_atom,
    dual_atom_eigenpairs,
    dual_gram_matrix,
    triangular_graph_adjacency,
    h_spectrum_predicted,
)
from .errors import DomainError
from .mds import (
    double_center,
    dual_expansion,
    embed,
    procrustes_residual,
    squared_distances,
)
from .nearness import constraint_gram, constraint_matrix, gram_identity_check, \
    predicted_singular_values
from .pairspace import PairIndex, PointConfiguration, linear_to_pair, num_pairs
from .report import CheckResult
from .spectral import group_spectrum, sym_eig

BIORTHOGONALITY_TOL = 1e-12
DUAL_SPECTRUM_TOL = 1e-10
INVERSE_TOL = 1e-9
EXPANSION_TOL = 1e-10
ROUND_TRIP_TOL = 1e-7
GROUPING_REL_TOL = 1e-8
RANDOM_CONFIGS = 5


def _check_reference_objects() -> CheckResult:
    """Golden four-point objects, compared in exact scaled integers."""
    n = _reference.REFERENCE_N
    alpha = PairIndex(1, 2, n)
    atom_dev = int(np.max(np.abs(basis_atom(alpha).entries - _reference.ATOM_12)))
    dual_dev = float(
        np.max(np.abs(16.0 * dual_atom(alpha).materialize() - _reference.DUAL_12_X16))
    )
    gram_dev = float(np.max(np.abs(basis_gram(n).entries - _reference.ATOM_GRAM)))
    inverse_dev = float(
        np.max(np.abs(16.0 * dual_gram_matrix(n) - _reference.DUAL_GRAM_X16))
    )
    A = constraint_matrix(n)
    dense = A.to_dense()
    row_dev = 0
    for (pos, apex), expected in _reference.CONSTRAINT_ROWS.items():
        row = A.row_of(PairIndex(pos[0], pos[1], n), apex)
        row_dev = max(row_dev, int(np.max(np.abs(dense[row - 1] - expected))))
    passed = (
        atom_dev == 0
        and dual_dev <= 1e-12
        and gram_dev <= 1e-12
        and inverse_dev <= 1e-12
        and row_dev == 0
    )
    return CheckResult(
        "reference_objects",
        passed,
        {
            "atom_deviation": atom_dev,
            "dual_atom_deviation_x16": dual_dev,
            "atom_gram_deviation": gram_dev,
            "dual_gram_deviation_x16": inverse_dev,
            "constraint_row_deviation": row_dev,
        },
    )


def _check_atom_gram_spectrum(n: int) -> CheckResult:
    H = basis_gram(n).entries
    vals, _ = sym_eig(H)
    observed = group_spectrum(vals, rel_tol=GROUPING_REL_TOL)
    predicted = h_spectrum_predicted(n)
    expected = sorted(predicted, key=lambda g: -g[0])
    ok = len(observed.groups) == len(expected) and all(
        mult == em and abs(rep - ev) <= GROUPING_REL_TOL * max(1.0, abs(ev))
        for (rep, mult), (ev, em) in zip(observed.groups, expected)
    )
    return CheckResult(
        "atom_gram_spectrum",
        ok,
        {"groups": [(round(r, 9), m) for r, m in observed.groups]},
    )


def _check_triangular_decomposition(n: int) -> CheckResult:
    H = np.rint(basis_gram(n).entries).astype(np.int64)
    adjacency = triangular_graph_adjacency(n)
    deviation = int(np.max(np.abs(H - 4 * np.eye(num_pairs(n), dtype=np.int64)
                                  - adjacency)))
    return CheckResult("triangular_decomposition", deviation == 0,
                       {"max_deviation": deviation})


def _check_biorthogonality(n: int) -> CheckResult:
    L = num_pairs(n)
    pairs = [linear_to_pair(k, n) for k in range(1, L + 1)]
    worst = 0.0
    for a_idx, alpha in enumerate(pairs):
        V = dual_atom(alpha).materialize()
        for b_idx, beta in enumerate(pairs):
            inner = (
                V[beta.i - 1, beta.i - 1]
                + V[beta.j - 1, beta.j - 1]
                - 2.0 * V[beta.i - 1, beta.j - 1]
            )
            target = 1.0 if a_idx == b_idx else 0.0
            worst = max(worst, abs(inner - target))
    return CheckResult("biorthogonality", worst <= BIORTHOGONALITY_TOL,
                       {"max_deviation": worst, "pairs": L})


def _check_dual_atom_spectra(n: int, rng: np.random.Generator) -> CheckResult:
    L = num_pairs(n)
    sample = range(1, L + 1) if L <= 45 else rng.choice(L, size=20, replace=False) + 1
    worst_value = 0.0
    worst_align = 0.0
    ranks_ok = True
    for k in sample:
        alpha = linear_to_pair(int(k), n)
        V = dual_atom(alpha).materialize()
        vals, vecs = sym_eig(V)
        nonzero = vals[np.abs(vals) > DUAL_SPECTRUM_TOL]
        ranks_ok = ranks_ok and nonzero.size == 2
        (lam_pos, vec_pos), (lam_neg, vec_neg) = dual_atom_eigenpairs(alpha)
        worst_value = max(
            worst_value,
            abs(float(np.max(vals)) - lam_pos),
            abs(float(np.min(vals)) - lam_neg),
        )
        for lam, vec in ((lam_pos, vec_pos), (lam_neg, vec_neg)):
            worst_align = max(
                worst_align, float(np.max(np.abs(V @ vec - lam * vec)))
            )
    passed = ranks_ok and worst_value <= DUAL_SPECTRUM_TOL \
        and worst_align <= DUAL_SPECTRUM_TOL
    return CheckResult(
        "dual_atom_spectrum",
        passed,
        {
            "rank_two_everywhere": ranks_ok,
            "max_eigenvalue_deviation": worst_value,
            "max_eigenvector_residual": worst_align,
        },
    )


def _check_dual_gram_inverse(n: int) -> CheckResult:
    H = basis_gram(n).entries
    G = dual_gram_matrix(n)
    deviation = float(np.max(np.abs(G @ H - np.eye(num_pairs(n)))))
    return CheckResult("dual_gram_inverse", deviation <= INVERSE_TOL,
                       {"max_deviation": deviation})


def _random_configurations(n: int, rng: np.random.Generator):
    for _ in range(RANDOM_CONFIGS):
        r = int(rng.integers(1, min(3, n - 1) + 1))
        yield PointConfiguration(rng.standard_normal((n, r)))


def _check_expansion_equivalence(n: int, rng: np.random.Generator,
                                 backend: str | None) -> CheckResult:
    worst = 0.0
    for P in _random_configurations(n, rng):
        D = squared_distances(P)
        gap = np.max(np.abs(dual_expansion(D, backend=backend).entries
                            - double_center(D).entries))
        scale = max(1.0, float(np.max(np.abs(D.entries))))
        worst = max(worst, float(gap) / scale)
    return CheckResult("expansion_equivalence", worst <= EXPANSION_TOL,
                       {"max_relative_deviation": worst})


def _check_embedding_round_trip(n: int, rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for P in _random_configurations(n, rng):
        D = squared_distances(P)
        recovered = embed(D).points
        residual = procrustes_residual(recovered, P)
        scale = float(np.linalg.norm(P.points))
        worst = max(worst, residual / max(scale, 1e-300))
    return CheckResult("embedding_round_trip", worst <= ROUND_TRIP_TOL,
                       {"max_relative_residual": worst})


def _check_constraint_gram_identity(n: int) -> CheckResult:
    ok, deviation = gram_identity_check(n)
    return CheckResult("constraint_gram_identity", ok, {"max_deviation": deviation})


def _check_constraint_singular_values(n: int) -> CheckResult:
    gram = constraint_gram(n).astype(float)
    vals, _ = sym_eig(gram)
    singular = np.sqrt(np.clip(vals, 0.0, None))
    observed = group_spectrum(singular, rel_tol=GROUPING_REL_TOL)
    expected = predicted_singular_values(n)
    ok = len(observed.groups) == len(expected) and all(
        mult == em and abs(rep - ev) <= GROUPING_REL_TOL * max(1.0, abs(ev))
        for (rep, mult), (ev, em) in zip(observed.groups, expected)
    )
    return CheckResult(
        "constraint_singular_values",
        ok,
        {"groups": [(round(r, 9), m) for r, m in observed.groups]},
    )


def run_verification(n: int, seed: int = 0,
                     backend: str | None = None) -> list[CheckResult]:
    """Run every check at size n; the golden-object check joins at n = 4."""
    if n < 3:
        raise DomainError(f"verification needs n >= 3, got n={n}")
    rng = np.random.default_rng(seed)
    checks: list[CheckResult] = []
    if n == _reference.REFERENCE_N:
        checks.append(_check_reference_objects())
    checks.append(_check_atom_gram_spectrum(n))
    checks.append(_check_triangular_decomposition(n))
    checks.append(_check_biorthogonality(n))
    checks.append(_check_dual_atom_spectra(n, rng))
    checks.append(_check_dual_gram_inverse(n))
    checks.append(_check_expansion_equivalence(n, rng, backend))
    checks.append(_check_embedding_round_trip(n, rng))
    checks.append(_check_constraint_gram_identity(n))
    checks.append(_check_constraint_singular_values(n))
    return checks
