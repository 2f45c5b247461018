"""Canonical indexing of vertex pairs and the core matrix value types.

Every object in this package is indexed by the set of unordered vertex
pairs {(i, j) : 1 <= i < j <= n}, enumerated lexicographically so that
(1,2) comes first and (n-1,n) last.  Indices are 1-based in all public
surfaces; 0-based arrays are an internal detail that never leaks.

All value types validate their invariants on construction (absolute
tolerance, default 1e-9) and freeze their storage.  A violation raises
:class:`~dualmds.errors.DomainError` rather than being silently repaired.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

DEFAULT_TOL = 1e-9


def num_pairs(n: int) -> int:
    """Number of unordered pairs on n vertices, n*(n-1)/2."""
    return n * (n - 1) // 2


@dataclass(frozen=True)
class PairIndex:
    """An unordered vertex pair (i, j) with 1 <= i < j <= n.

    The pair has a canonical linear position in the lexicographic
    enumeration of all pairs: (1,2) -> 1, (1,3) -> 2, ..., (n-1,n) -> L.
    """

    i: int
    j: int
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"need at least 2 points, got n={self.n}")
        if not (1 <= self.i < self.j <= self.n):
            raise DomainError(
                f"pair ({self.i},{self.j}) invalid for n={self.n}: need 1 <= i < j <= n"
            )

    @property
    def linear(self) -> int:
        """1-based position of this pair in lexicographic order."""
        return pair_to_linear(self)


def pair_to_linear(p: PairIndex) -> int:
    """Linear index (1-based) of a pair under lexicographic enumeration."""
    i, j, n = p.i, p.j, p.n
    return (i - 1) * n - i * (i - 1) // 2 + (j - i)


def linear_to_pair(k: int, n: int) -> PairIndex:
    """Inverse of :func:`pair_to_linear`; raises on k outside [1, L]."""
    L = num_pairs(n)
    if not 1 <= k <= L:
        raise DomainError(f"linear index {k} out of range [1, {L}] for n={n}")
    i = 1
    remaining = k
    while remaining > n - i:
        remaining -= n - i
        i += 1
    return PairIndex(i, i + remaining, n)


def pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """0-based (row, col) index arrays of all pairs in lexicographic order.

    These feed the numeric kernels; public callers should prefer
    :class:`PairIndex`.
    """
    rows, cols = np.triu_indices(n, k=1)
    return rows.astype(np.int64), cols.astype(np.int64)


def _as_float_matrix(entries, name: str) -> np.ndarray:
    E = np.array(entries, dtype=float)
    if E.ndim != 2 or E.shape[0] != E.shape[1]:
        raise DomainError(f"{name} must be a square matrix, got shape {E.shape}")
    if not np.all(np.isfinite(E)):
        raise DomainError(f"{name} contains non-finite entries")
    return E


def _check_symmetric(E: np.ndarray, tol: float, name: str) -> None:
    dev = float(np.max(np.abs(E - E.T))) if E.size else 0.0
    if dev > tol:
        raise DomainError(f"{name} not symmetric: max |E - E^T| = {dev:.3e} > {tol:.1e}")

def _check_hollow(E: np.ndarray, tol: float, name: str) -> None:
    dev = float(np.max(np.abs(np.diag(E)))) if E.size else 0.0
    if dev > tol:
        raise DomainError(f"{name} diagonal not zero: max |diag| = {dev:.3e} > {tol:.1e}")


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class SquaredDistanceMatrix:
    """Symmetric hollow nonnegative matrix of squared pairwise distances."""

    __slots__ = ("entries",)

    def __init__(self, entries, tol: float = DEFAULT_TOL):
        E = _as_float_matrix(entries, "squared-distance matrix")
        _check_symmetric(E, tol, "squared-distance matrix")
        _check_hollow(E, tol, "squared-distance matrix")
        if E.size and float(E.min()) < -tol:
            raise DomainError(
                f"squared-distance matrix has negative entry {float(E.min()):.3e}"
            )
        self.entries = _freeze(E)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def upper_entries(self) -> np.ndarray:
        """Entries above the diagonal in lexicographic pair order."""
        rows, cols = pair_arrays(self.n)
        return self.entries[rows, cols]


class GramMatrix:
    """Symmetric matrix with zero row sums (inner products of centered points)."""

    __slots__ = ("entries",)

    def __init__(self, entries, tol: float = DEFAULT_TOL):
        E = _as_float_matrix(entries, "Gram matrix")
        _check_symmetric(E, tol, "Gram matrix")
        rowsum = float(np.max(np.abs(E.sum(axis=1)))) if E.size else 0.0
        if rowsum > tol:
            raise DomainError(
                f"Gram matrix not zero-centered: max |row sum| = {rowsum:.3e} > {tol:.1e}"
            )
        self.entries = _freeze(E)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


class PointConfiguration:
    """n points in R^r stacked as rows, with n > r."""

    __slots__ = ("points",)

    def __init__(self, points):
        P = np.array(points, dtype=float)
        if P.ndim != 2:
            raise DomainError(f"points must be a 2-d array, got shape {P.shape}")
        if not np.all(np.isfinite(P)):
            raise DomainError("points contain non-finite coordinates")
        n, r = P.shape
        if n <= r:
            raise DomainError(f"need more points than dimensions, got n={n}, r={r}")
        self.points = _freeze(P)

    @property
    def n(self) -> int:
        return self.points.shape[0]

    @property
    def r(self) -> int:
        return self.points.shape[1]


class CenteringMatrix:
    """The projection I - (1/n) 11^T onto the mean-zero subspace."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int):
        if n < 2:
            raise DomainError(f"centering matrix needs n >= 2, got {n}")
        self.n = n
        E = np.eye(n) - np.full((n, n), 1.0 / n)
        self.entries = _freeze(E)


def centering_matrix(n: int) -> CenteringMatrix:
    """Centering matrix of size n: diagonal (n-1)/n, off-diagonal -1/n."""
    return CenteringMatrix(n)
