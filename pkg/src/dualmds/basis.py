"""The measurement atoms w, their rank-2 duals v, and the atom Gram matrix.

For every vertex pair alpha = (i, j) there is a sparse integer atom
``w_alpha`` that reads a squared distance off a Gram matrix, and a dense
rank-2 dual atom ``v_alpha`` built from two columns of the centering
matrix.  The families are biorthogonal: <v_alpha, w_beta> is 1 when
alpha = beta and 0 otherwise, where <A, B> = trace(A^T B).

The L x L Gram matrix H of the w family (L = n(n-1)/2 pairs) decomposes
as 4I plus the adjacency matrix of the triangular graph (pairs adjacent
iff they share a vertex), which pins its spectrum to the three values
2, n and 2n.  The Gram matrix of the v family is H^{-1}, with entries
available in closed form from centering-matrix entries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ResourceLimitError
from .pairspace import PairIndex, centering_matrix, num_pairs, pair_arrays

DENSE_PAIR_CAP = 20000


@dataclass(frozen=True, eq=False)
class BasisAtom:
    """Integer atom with +1 at both diagonal slots of its pair, -1 off-diagonal."""

    alpha: PairIndex
    entries: np.ndarray

    def __post_init__(self):
        E = self.entries
        n = self.alpha.n
        if E.shape != (n, n):
            raise DomainError(f"atom entries must be {n}x{n}, got {E.shape}")
        if np.count_nonzero(E) != 4:
            raise DomainError("atom must have exactly four nonzero entries")
        if not np.array_equal(E, E.T) or int(E.trace()) != 2 or np.any(E.sum(axis=1)):
            raise DomainError("atom must be symmetric with zero row sums and trace 2")
        E.setflags(write=False)


class DualAtom:
    """Rank-2 dual atom -1/2 (a b^T + b a^T) stored by its two factors.

    The factors a and b are the centering-matrix columns at the pair's
    two vertices; the dense matrix is materialized on first request and
    cached.  Rank is exactly 2 for n >= 3 and degenerates to 1 at n = 2,
    where the second eigenvalue -1/2 + 1/n vanishes.
    """

    __slots__ = ("alpha", "a", "b", "_matrix")

    def __init__(self, alpha: PairIndex, a: np.ndarray, b: np.ndarray):
        self.alpha = alpha
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if a.shape != (alpha.n,) or b.shape != (alpha.n,):
            raise DomainError(f"dyadic factors must have shape ({alpha.n},)")
        a.setflags(write=False)
        b.setflags(write=False)
        self.a = a
        self.b = b
        self._matrix = None

    def materialize(self) -> np.ndarray:
        """Dense n x n form; computed once, then cached read-only."""
        if self._matrix is None:
            M = -0.5 * (np.outer(self.a, self.b) + np.outer(self.b, self.a))
            M.setflags(write=False)
            self._matrix = M
        return self._matrix


@dataclass(frozen=True, eq=False)
class BasisGram:
    """The L x L Gram matrix H of the w family: diagonal 4, off-diagonal 0/1."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        L = num_pairs(self.n)
        E = self.entries
        if E.shape != (L, L):
            raise DomainError(f"Gram entries must be {L}x{L}, got {E.shape}")
        E.setflags(write=False)

    @property
    def num_pairs(self) -> int:
        return self.entries.shape[0]


def basis_atom(alpha: PairIndex) -> BasisAtom:
    """The four-entry integer atom for pair alpha."""
    n = alpha.n
    i, j = alpha.i - 1, alpha.j - 1
    E = np.zeros((n, n), dtype=np.int64)
    E[i, i] = 1
    E[j, j] = 1
    E[i, j] = -1
    E[j, i] = -1
    return BasisAtom(alpha=alpha, entries=E)


def dual_atom(alpha: PairIndex) -> DualAtom:
    """The rank-2 dual atom for pair alpha, factored through J's columns."""
    J = centering_matrix(alpha.n).entries
    return DualAtom(alpha=alpha, a=J[:, alpha.i - 1].copy(), b=J[:, alpha.j - 1].copy())


def dual_atom_eigenpairs(alpha: PairIndex) -> tuple[tuple[float, np.ndarray],
                                                    tuple[float, np.ndarray]]:
    """The two (eigenvalue, eigenvector) pairs of a dual atom.

    Returns (1/2, a - b) and (-1/2 + 1/n, a + b).  The eigenvectors are
    returned unnormalized.  At n = 2 the second eigenvalue is 0 and the
    atom is rank 1.
    """
    v = dual_atom(alpha)
    return (0.5, v.a - v.b), (-0.5 + 1.0 / alpha.n, v.a + v.b)


def basis_gram(n: int, max_pairs: int = DENSE_PAIR_CAP) -> BasisGram:
    """Dense H for n points: 4 on the diagonal, 1 iff pairs share a vertex.

    Refuses to allocate when the pair count exceeds ``max_pairs``
    (L x L dense storage); use :func:`h_matvec` past that scale.
    """
    if n < 2:
        raise DomainError(f"need at least 2 points, got n={n}")
    L = num_pairs(n)
    if L > max_pairs:
        raise ResourceLimitError(
            f"n={n} gives {L} pairs, beyond the dense cap of {max_pairs}"
        )
    rows, cols = pair_arrays(n)
    share = (
        (rows[:, None] == rows[None, :])
        | (rows[:, None] == cols[None, :])
        | (cols[:, None] == rows[None, :])
        | (cols[:, None] == cols[None, :])
    )
    H = share.astype(np.float64)
    np.fill_diagonal(H, 4.0)
    return BasisGram(n=n, entries=H)


def triangular_graph_adjacency(n: int, max_pairs: int = DENSE_PAIR_CAP) -> np.ndarray:
    """Adjacency matrix of the triangular graph: pairs adjacent iff they meet.

    Built independently of :func:`basis_gram` from the shared-vertex rule;
    ``basis_gram(n) - 4I`` must equal this matrix exactly.
    """
    if n < 2:
        raise DomainError(f"need at least 2 points, got n={n}")
    L = num_pairs(n)
    if L > max_pairs:
        raise ResourceLimitError(
            f"n={n} gives {L} pairs, beyond the dense cap of {max_pairs}"
        )
    rows, cols = pair_arrays(n)
    A = np.zeros((L, L), dtype=np.int64)
    for p in range(L):
        for q in range(p + 1, L):
            shared = len({rows[p], cols[p]} & {rows[q], cols[q]})
            if shared == 1:
                A[p, q] = 1
                A[q, p] = 1
    return A


def h_matvec(n: int, x: np.ndarray) -> np.ndarray:
    """Product H @ x without materializing H.

    Uses the per-vertex load s_v = sum of x over pairs containing v:
    (Hx) at pair (i, j) equals 2 x_(i,j) + s_i + s_j.
    """
    x = np.asarray(x, dtype=float)
    L = num_pairs(n)
    if x.shape != (L,):
        raise DomainError(f"expected a vector of length {L}, got shape {x.shape}")
    rows, cols = pair_arrays(n)
    s = np.zeros(n)
    np.add.at(s, rows, x)
    np.add.at(s, cols, x)
    return 2.0 * x + s[rows] + s[cols]


def h_spectrum_predicted(n: int) -> list[tuple[float, int]]:
    """Closed-form spectrum of H: eigenvalues 2, n, 2n.

    Multiplicities are L - n, n - 1 and 1.  Groups with equal eigenvalue
    are merged and zero-multiplicity groups dropped, which only matters
    for the degenerate sizes n = 2 (single pair, spectrum {4}) and n = 3
    (eigenvalue 2 absent).  Returned in increasing eigenvalue order.
    """
    if n < 2:
        raise DomainError(f"need at least 2 points, got n={n}")
    L = num_pairs(n)
    merged: dict[float, int] = {}
    for value, mult in ((2.0, L - n), (float(n), n - 1), (2.0 * n, 1)):
        merged[value] = merged.get(value, 0) + mult
    groups = [(v, m) for v, m in sorted(merged.items()) if m > 0]
    if sum(m for _, m in groups) != L:
        raise DomainError(f"spectrum multiplicities must sum to {L}")
    return groups


def dual_gram_entry(alpha: PairIndex, beta: PairIndex) -> float:
    """Inner product <v_alpha, v_beta> from the dyadic factors.

    Expands trace((a b^T + b a^T)(c d^T + d c^T)) / 4 into dot products
    of centering-matrix columns:  ((a.c)(b.d) + (a.d)(b.c)) / 2.
    Assembling all entries yields the inverse of the atom Gram matrix.
    """
    if alpha.n != beta.n:
        raise DomainError(f"pairs live in different sizes: n={alpha.n} vs n={beta.n}")
    va = dual_atom(alpha)
    vb = dual_atom(beta)
    return 0.5 * (
        float(va.a @ vb.a) * float(va.b @ vb.b)
        + float(va.a @ vb.b) * float(va.b @ vb.a)
    )


def dual_gram_matrix(n: int, max_pairs: int = DENSE_PAIR_CAP) -> np.ndarray:
    """All L x L inner products of the dual family, i.e. H^{-1}."""
    if n < 2:
        raise DomainError(f"need at least 2 points, got n={n}")
    L = num_pairs(n)
    if L > max_pairs:
        raise ResourceLimitError(
            f"n={n} gives {L} pairs, beyond the dense cap of {max_pairs}"
        )
    J = centering_matrix(n).entries
    rows, cols = pair_arrays(n)
    # The dot products of J's columns are J's own entries (J symmetric,
    # idempotent), so the entry formula vectorizes over all pair pairs.
    G = 0.5 * (
        J[np.ix_(rows, rows)] * J[np.ix_(cols, cols)]
        + J[np.ix_(rows, cols)] * J[np.ix_(cols, rows)]
    )
    return G
