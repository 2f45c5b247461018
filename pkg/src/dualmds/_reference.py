"""Golden reference objects for the four-point case.

Everything here is small enough to check by hand and is stored in
integer form: matrices whose entries are sixteenths carry an ``_X16``
suffix and hold 16 times the true values, so comparisons stay exact.
The verify command checks freshly constructed objects against these.
"""

from __future__ import annotations

import numpy as np

REFERENCE_N = 4

# the measurement atom of pair (1, 2)
ATOM_12 = np.array(
    [
        [1, -1, 0, 0],
        [-1, 1, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ],
    dtype=np.int64,
)

# 16 x the dual atom of pair (1, 2)
DUAL_12_X16 = np.array(
    [
        [3, -5, 1, 1],
        [-5, 3, 1, 1],
        [1, 1, -1, -1],
        [1, 1, -1, -1],
    ],
    dtype=np.int64,
)

# the 6 x 6 Gram matrix of the atom family, pairs in lexicographic order
ATOM_GRAM = np.array(
    [
        [4, 1, 1, 1, 1, 0],
        [1, 4, 1, 1, 0, 1],
        [1, 1, 4, 0, 1, 1],
        [1, 1, 0, 4, 1, 1],
        [1, 0, 1, 1, 4, 1],
        [0, 1, 1, 1, 1, 4],
    ],
    dtype=np.int64,
)

# 16 x the inverse of the atom Gram matrix
DUAL_GRAM_X16 = np.array(
    [
        [5, -1, -1, -1, -1, 1],
        [-1, 5, -1, -1, 1, -1],
        [-1, -1, 5, 1, -1, -1],
        [-1, -1, 1, 5, -1, -1],
        [-1, 1, -1, -1, 5, -1],
        [1, -1, -1, -1, -1, 5],
    ],
    dtype=np.int64,
)

# hand-checked triangle-constraint rows, keyed by (positive pair, apex vertex);
# values are dense rows over the 6 pair columns in lexicographic order
CONSTRAINT_ROWS = {
    ((1, 2), 3): np.array([1, -1, 0, -1, 0, 0], dtype=np.int64),
    ((1, 3), 2): np.array([-1, 1, 0, -1, 0, 0], dtype=np.int64),
    ((2, 3), 1): np.array([-1, -1, 0, 1, 0, 0], dtype=np.int64),
    ((2, 3), 4): np.array([0, 0, 0, 1, -1, -1], dtype=np.int64),
}

for _m in (ATOM_12, DUAL_12_X16, ATOM_GRAM, DUAL_GRAM_X16, *CONSTRAINT_ROWS.values()):
    _m.setflags(write=False)
