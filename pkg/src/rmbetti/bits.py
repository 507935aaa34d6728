"""Bitmask subset sweeps: popcount tables and subset (zeta) transforms.

Subsets of an n-element ground set are ints with bit i standing for
element i.  The transforms below run over the full 2**n lattice in
O(n * 2**n) vectorized steps.
"""

from __future__ import annotations

import numpy as np


def popcount_table(n: int) -> np.ndarray:
    """pc[mask] = number of set bits, for every mask < 2**n."""
    pc = np.zeros(1 << n, dtype=np.uint8)
    for b in range(n):
        pc[1 << b: 1 << (b + 1)] = pc[: 1 << b] + 1
    return pc


def _paired_views(values: np.ndarray, n: int, axis: int):
    v = values.reshape((2,) * n)
    hi = [slice(None)] * n
    lo = [slice(None)] * n
    hi[axis] = 1
    lo[axis] = 0
    return v[tuple(hi)], v[tuple(lo)]


def subset_sum_accumulate(values: np.ndarray, n: int) -> None:
    """In place: values[W] becomes sum of the original values over all subsets of W."""
    for axis in range(n):
        hi, lo = _paired_views(values, n, axis)
        hi += lo


def subset_max_accumulate(values: np.ndarray, n: int) -> None:
    """In place: values[W] becomes max of the original values over all subsets of W."""
    for axis in range(n):
        hi, lo = _paired_views(values, n, axis)
        np.maximum(hi, lo, out=hi)


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)
