"""Deterministic symmetric eigendecomposition with multiplicity grouping.

Every spectrum check in the package goes through :func:`sym_eig` so that
eigenvalue ordering and eigenvector signs are fixed once, here, and
golden tests stay stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

DEFAULT_GROUP_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """Eigenvalues grouped into (representative, multiplicity) clusters.

    ``groups`` lists representatives in strictly decreasing order; the
    multiplicities sum to the matrix dimension.  ``raw`` keeps the
    ungrouped eigenvalues, sorted descending.
    """

    groups: tuple[tuple[float, int], ...]
    raw: np.ndarray
    rel_tol: float = field(default=DEFAULT_GROUP_TOL)

    def __post_init__(self):
        total = sum(m for _, m in self.groups)
        if total != self.raw.shape[0]:
            raise DomainError(
                f"group multiplicities sum to {total}, expected {self.raw.shape[0]}"
            )
        reps = [v for v, _ in self.groups]
        if any(hi <= lo for hi, lo in zip(reps, reps[1:])):
            raise DomainError("group representatives must be strictly decreasing")
        self.raw.setflags(write=False)

    def multiplicity_of(self, value: float, tol: float = 1e-6) -> int:
        """Multiplicity of the group whose representative is nearest ``value``."""
        for rep, mult in self.groups:
            if abs(rep - value) <= tol * max(1.0, abs(value)):
                return mult
        return 0


def sym_eig(M: np.ndarray, sym_tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a symmetric matrix, descending, sign-fixed.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues sorted in
    descending order and eigenvectors as columns.  Each eigenvector is
    normalized so its largest-magnitude component is positive (ties
    resolved toward the lowest index), which makes the output a pure
    function of the input matrix.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {M.shape}")
    if M.size and float(np.max(np.abs(M - M.T))) > sym_tol:
        raise DomainError(
            f"matrix not symmetric within {sym_tol:.1e}: "
            f"max |M - M^T| = {float(np.max(np.abs(M - M.T))):.3e}"
        )
    vals, vecs = np.linalg.eigh(M)
    vals = vals[::-1].copy()
    vecs = vecs[:, ::-1].copy()
    for k in range(vecs.shape[1]):
        lead = int(np.argmax(np.abs(vecs[:, k])))
        if vecs[lead, k] < 0:
            vecs[:, k] = -vecs[:, k]
    return vals, vecs


def group_spectrum(eigenvalues, rel_tol: float = DEFAULT_GROUP_TOL) -> SpectrumReport:
    """Cluster a descending eigenvalue list into multiplicity groups.

    Adjacent values v, v' are merged when |v - v'| <= rel_tol * max(1, |v|);
    each group is represented by its mean.
    """
    vals = np.asarray(eigenvalues, dtype=float).ravel()
    if vals.size == 0:
        return SpectrumReport(groups=(), raw=vals.copy(), rel_tol=rel_tol)
    if np.any(np.diff(vals) > 0):
        raise DomainError("eigenvalues must be sorted in descending order")
    groups: list[tuple[float, int]] = []
    start = 0
    for k in range(1, vals.size + 1):
        if k == vals.size or abs(vals[k - 1] - vals[k]) > rel_tol * max(1.0, abs(vals[k - 1])):
            block = vals[start:k]
            groups.append((float(block.mean()), int(block.size)))
            start = k
    return SpectrumReport(groups=tuple(groups), raw=vals.copy(), rel_tol=rel_tol)
