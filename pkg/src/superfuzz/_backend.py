"""Kernel selection.

The compiled extension is preferred. Setting ``SUPERFUZZ_PURE_PYTHON=1``
forces the numpy fallback, which is also used when the extension did not
build.
"""

import os

from . import _fallback

BACKEND = "numpy"
maxmin_matmul = _fallback.maxmin_matmul
threshold_update = _fallback.threshold_update
bam_signal = _fallback.bam_signal

if os.environ.get("SUPERFUZZ_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _kernels
    except ImportError:
        _kernels = None
    if _kernels is not None:
        BACKEND = "cython"
        maxmin_matmul = _kernels.maxmin_matmul
        threshold_update = _kernels.threshold_update
        bam_signal = _kernels.bam_signal
