"""Supermatrix algebra over plus-times and max-min semirings, and
multi-expert fuzzy inference models built on it.

Modules
-------
partition
    Cut schemes, their classification, enumeration and super-diagonal
    assembly.
algebra
    The SuperMatrix type, transposes, addition and block products.
fuzzy
    Fuzzy matrices, state vectors, moments and threshold functions.
models
    FCM, FRM, BAM and FAM models with hidden-pattern iteration.
jsonio, report, cli
    File formats, renderings and the ``superfuzz`` command.
"""

from ._backend import BACKEND
from .algebra import (
    Semiring,
    SuperMatrix,
    add,
    flat_equal,
    is_pseudo_symmetric,
    is_pseudo_symmetric_supermatrix,
    is_symmetric_supermatrix,
    multiply,
    pseudo_transpose,
    transpose,
)
from .errors import *  # noqa: F401,F403
from .fuzzy import (
    FuzzyMatrix,
    StateDomain,
    SuperStateVector,
    bam_signal,
    minor_product_moment,
    super_pseudo_product,
    threshold_update,
)
from .models import (
    FixedPoint,
    LimitCycle,
    MaxStepsExceeded,
    ModelKind,
    ModelSpec,
    RunTrace,
    Side,
    Variant,
    bam_recall,
    combine_models,
    fam_recall,
    fcm_hidden_pattern,
    frm_hidden_pattern,
    run_model,
    validate_model,
)
from .partition import (
    PartitionClass,
    PartitionScheme,
    classify_partition,
    count_symmetric_partitions,
    enumerate_partitions,
    super_diagonal,
    validate_scheme,
)

__version__ = "0.1.0"
