"""How additive distance noise propagates through the atom expansion.

Perturbing the squared distances by a symmetric hollow noise matrix
perturbs the Gram matrix linearly.  The worst-case entrywise blow-up,
over all noise patterns of unit sup-norm, is an explicit function of the
centering-matrix entries; it stays strictly below 4 at every size.
:func:`noise_experiment` drives seeded random trials against that bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import amplification_kernel
from .errors import DomainError
from .mds import dual_expansion, expand_coefficients, squared_distances
from .pairspace import (
    GramMatrix,
    PointConfiguration,
    SquaredDistanceMatrix,
    centering_matrix,
    pair_arrays,
)

NOISE_BOUND = 4.0


@dataclass(frozen=True, eq=False)
class NoiseMatrix:
    """Symmetric hollow perturbation of a squared-distance matrix.

    Entries may be negative; noisy distances are allowed to leave the
    cone of true squared distances.
    """

    entries: np.ndarray

    def __post_init__(self):
        E = np.array(self.entries, dtype=float)
        if E.ndim != 2 or E.shape[0] != E.shape[1]:
            raise DomainError(f"noise must be a square matrix, got shape {E.shape}")
        if not np.all(np.isfinite(E)):
            raise DomainError("noise contains non-finite entries")
        if E.size and float(np.max(np.abs(E - E.T))) > 1e-12:
            raise DomainError("noise matrix must be symmetric")
        if E.size and float(np.max(np.abs(np.diag(E)))) > 0.0:
            raise DomainError("noise matrix must have a zero diagonal")
        E.setflags(write=False)
        object.__setattr__(self, "entries", E)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.entries))) if self.entries.size else 0.0


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of a batch of noise trials at one problem size.

    ``max_ratio`` is the largest observed ‖Gram perturbation‖_sup over
    ‖distance noise‖_sup; it can never exceed ``factor`` (the exact
    worst case for this n), which in turn is strictly below ``bound``.
    """

    n: int
    trials: int
    max_ratio: float
    factor: float
    bound: float
    passed: bool


def amplification_factor(n: int, backend: str | None = None) -> float:
    """Exact worst-case sup-norm amplification at size n.

    The maximum over all matrix positions (a, b) of the sum, over vertex
    pairs i < j, of |J[a,i] * J[j,b]| with J the centering matrix.
    Always at least ((n-1)/n)^2 and strictly below 4.
    """
    if n < 2:
        raise DomainError(f"need at least 2 points, got n={n}")
    J = centering_matrix(n).entries
    return amplification_kernel(J, backend=backend)


def perturbed_gram(D: SquaredDistanceMatrix, noise: NoiseMatrix,
                   backend: str | None = None) -> GramMatrix:
    """Gram matrix of the noisy distances D + noise, via the atom expansion.

    The expansion is linear, so the result differs from the clean Gram
    matrix by exactly the expansion of the noise alone.
    """
    if noise.n != D.n:
        raise DomainError(f"noise is {noise.n}x{noise.n}, distances are {D.n}x{D.n}")
    rows, cols = pair_arrays(D.n)
    noisy_upper = D.entries[rows, cols] + noise.entries[rows, cols]
    return GramMatrix(expand_coefficients(noisy_upper, D.n, backend=backend))


def noise_experiment(n: int, r: int, epsilon: float, trials: int,
                     seed: int, backend: str | None = None) -> StabilityReport:
    """Seeded random noise trials: observed amplification vs. the exact factor.

    Each trial draws a standard-normal configuration of n points in r
    dimensions, its squared distances, and symmetric hollow noise with
    entries uniform in [-epsilon, epsilon]; it then records the ratio
    ‖noisy Gram - clean Gram‖_sup / ‖noise‖_sup.  Per-trial generators
    are spawned from the master seed, so the report is reproducible and
    independent of execution order.
    """
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    if not epsilon > 0:
        raise DomainError(f"noise level must be positive, got {epsilon}")
    if not 1 <= r < n:
        raise DomainError(f"need n > r >= 1, got n={n}, r={r}")
    factor = amplification_factor(n, backend=backend)
    rows, cols = pair_arrays(n)
    max_ratio = 0.0
    for child in np.random.SeedSequence(seed).spawn(trials):
        rng = np.random.default_rng(child)
        P = PointConfiguration(rng.standard_normal((n, r)))
        D = squared_distances(P)
        upper = rng.uniform(-epsilon, epsilon, size=rows.shape[0])
        E = np.zeros((n, n))
        E[rows, cols] = upper
        E[cols, rows] = upper
        noise = NoiseMatrix(E)
        clean = dual_expansion(D, backend=backend).entries
        noisy = perturbed_gram(D, noise, backend=backend).entries
        deviation = float(np.max(np.abs(noisy - clean)))
        ratio = deviation / noise.sup_norm()
        max_ratio = max(max_ratio, ratio)
    passed = max_ratio < NOISE_BOUND and max_ratio <= factor + 1e-12
    return StabilityReport(
        n=n,
        trials=trials,
        max_ratio=max_ratio,
        factor=factor,
        bound=NOISE_BOUND,
        passed=passed,
    )
