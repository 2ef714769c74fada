"""Deterministic compensated summation helpers.

All large sums in this package go through :func:`pairwise_sum`, which reduces
a float64 array in fixed 128-element blocks and then combines the block
partials with an exact (Shewchuk) float sum.  The reduction shape depends only
on the length of the input, so results are bit-reproducible and the worst-case
rounding error stays at the block level (~128 * eps relative) instead of
growing linearly with n as in naive accumulation.

:func:`kahan_sum` is a scalar fallback (Neumaier variant) for values that
arrive one at a time.
"""

import math

import numpy as np

_BLOCK = 128


def pairwise_sum(values) -> float:
    """Sum a 1-d float array with a fixed blockwise/exact reduction."""
    arr = np.ascontiguousarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("pairwise_sum expects a 1-d array")
    n = arr.shape[0]
    if n == 0:
        return 0.0
    if n <= _BLOCK:
        return math.fsum(arr.tolist())
    head = (n // _BLOCK) * _BLOCK
    partials = np.sum(arr[:head].reshape(-1, _BLOCK), axis=1).tolist()
    if head < n:
        partials.append(math.fsum(arr[head:].tolist()))
    return math.fsum(partials)


def kahan_sum(values) -> float:
    """Neumaier-compensated sequential sum of an iterable of floats."""
    total = 0.0
    comp = 0.0
    for x in values:
        t = total + x
        if abs(total) >= abs(x):
            comp += (total - t) + x
        else:
            comp += (x - t) + total
        total = t
    return total + comp
