"""Two infinite sequences of bent functions with matching strongly regular
parameters: the sign-of-square functions and the non-diagonal-symmetry
functions.

Index convention: bit strings are read most-significant-first, so the two-bit
prefix of a 2m-bit index occupies bits 2m-1 and 2m-2. This reading is pinned
by the bentness, degree and SRG-parameter checks in the test suite; if any of
those fail, the convention is wrong and must not be silently swapped.
"""

from __future__ import annotations

import numpy as np

from .boolean_fn import BooleanFunction


def sigma(m: int) -> BooleanFunction:
    """sigma_m(i) = 1 iff the number of 1 digits in the m-digit base-4
    representation of i is odd."""
    if m < 1:
        raise ValueError("m must be >= 1")
    i = np.arange(1 << (2 * m), dtype=np.int64)
    ones = np.zeros(i.shape, dtype=np.int64)
    for d in range(m):
        ones += ((i >> (2 * d)) & 3) == 1
    return BooleanFunction(2 * m, (ones & 1).astype(np.uint8))


def tau(m: int) -> BooleanFunction:
    """tau_1 is the indicator of the bit string "10"; tau_m splits on the
    two-bit prefix: 00 and 11 recurse into tau_{m-1}, 01 gives sigma_{m-1},
    10 gives its complement."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return BooleanFunction(2, [0, 0, 1, 0])
    tp = tau(m - 1).table
    sp = sigma(m - 1).table
    return BooleanFunction(2 * m, np.concatenate([tp, sp, sp ^ 1, tp]))
