"""Pure numpy versions of the compiled kernels.

Used when the extension is unavailable or ``SUPERFUZZ_PURE_PYTHON`` is set.
Signatures and results match ``_kernels`` exactly.
"""

import numpy as np


def maxmin_matmul(a, b):
    """Max-min product of two 2-D float arrays, with 0 as the empty max."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    out = np.zeros((a.shape[0], b.shape[1]))
    # one rank-1 min per shared index keeps memory at O(m*n)
    for j in range(a.shape[1]):
        np.maximum(out, np.minimum(a[:, j, None], b[None, j, :]), out=out)
    return out


def threshold_update(raw, clamp):
    """1 where ``raw > 0`` or ``clamp`` is set, else 0."""
    raw = np.asarray(raw, dtype=np.float64)
    return ((raw > 0) | np.asarray(clamp, dtype=bool)).astype(np.float64)


def bam_signal(raw, previous, thresholds):
    """Three-branch binary signal: above 1, equal keeps previous, below 0."""
    raw = np.asarray(raw, dtype=np.float64)
    u = np.asarray(thresholds, dtype=np.float64)
    prev = np.asarray(previous, dtype=np.float64)
    return np.where(raw > u, 1.0, np.where(raw < u, 0.0, prev))
