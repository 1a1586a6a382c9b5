"""The SuperMatrix value type and semiring algebra over it.

Products are computed block by block over the partition grid and accumulate
the partial block products with the semiring's addition. For any
conformable pair the result equals the flat product; the block grid only
decides the result's scheme.
"""

from __future__ import annotations

import enum
from typing import Iterator

import numpy as np

from . import _backend
from .errors import BlockMismatch, SchemeMismatch, ShapeMismatch
from .partition import (
    PartitionScheme,
    classify_partition,
    is_pseudo_class,
    validate_scheme,
)

FUZZY_TOL = 1e-9


class Semiring(enum.Enum):
    """Accumulate/combine pair used by :func:`multiply`.

    ``PLUS_TIMES`` is ordinary arithmetic. ``MAX_MIN`` accumulates with max
    and combines with min; its additive identity is 0, so an empty
    reduction yields 0.
    """

    PLUS_TIMES = "plus"
    MAX_MIN = "maxmin"

    @classmethod
    def parse(cls, value) -> "Semiring":
        if isinstance(value, cls):
            return value
        key = str(value).lower().replace("-", "").replace("_", "")
        for s in cls:
            if key in (s.value, s.name.lower().replace("_", "")):
                return s
        raise ValueError(f"unknown semiring {value!r}")


class SuperMatrix:
    """A dense real matrix together with a partition scheme.

    Parameters
    ----------
    entries : array_like
        2-D data; 1-D input is read as a single row. Stored as a read-only
        float64 copy.
    scheme : PartitionScheme, optional
        Defaults to the trivial scheme.

    Notes
    -----
    ``==`` is strict: equal shape, entries and scheme. Use
    :func:`flat_equal` to ignore the scheme.
    """

    __slots__ = ("_entries", "_scheme")

    def __init__(self, entries, scheme: PartitionScheme | None = None):
        arr = np.array(entries, dtype=np.float64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ShapeMismatch(f"entries must be 2-D, got {arr.ndim}-D")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeMismatch(f"empty matrix {arr.shape}")
        if np.isnan(arr).any():
            raise ValueError("NaN entries are not allowed")
        arr.setflags(write=False)
        scheme = scheme if scheme is not None else PartitionScheme()
        validate_scheme(scheme, arr.shape[0], arr.shape[1])
        self._entries = arr
        self._scheme = scheme

    @classmethod
    def from_cuts(cls, entries, row_cuts=(), col_cuts=()):
        return cls(entries, PartitionScheme(tuple(row_cuts), tuple(col_cuts)))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def scheme(self) -> PartitionScheme:
        return self._scheme

    @property
    def rows(self) -> int:
        return self._entries.shape[0]

    @property
    def cols(self) -> int:
        return self._entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._entries.shape

    @property
    def row_cuts(self) -> tuple[int, ...]:
        return self._scheme.row_cuts

    @property
    def col_cuts(self) -> tuple[int, ...]:
        return self._scheme.col_cuts

    @property
    def block_shape(self) -> tuple[int, int]:
        """Number of block rows and block columns."""
        return len(self.row_cuts) + 1, len(self.col_cuts) + 1

    def block(self, i: int, j: int) -> np.ndarray:
        """The ``(i, j)`` submatrix, 0-based in block coordinates."""
        r0, r1 = self._scheme.row_bounds(self.rows)[i]
        c0, c1 = self._scheme.col_bounds(self.cols)[j]
        return self._entries[r0:r1, c0:c1]

    def blocks(self) -> Iterator[tuple[int, int, np.ndarray]]:
        for i, (r0, r1) in enumerate(self._scheme.row_bounds(self.rows)):
            for j, (c0, c1) in enumerate(self._scheme.col_bounds(self.cols)):
                yield i, j, self._entries[r0:r1, c0:c1]

    def with_scheme(self, scheme: PartitionScheme) -> "SuperMatrix":
        return type(self)(self._entries, scheme)

    def to_array(self) -> np.ndarray:
        return self._entries.copy()

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self._scheme == other._scheme and np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash((self.shape, self._entries.tobytes(), self._scheme))

    def __repr__(self):
        return (
            f"{type(self).__name__}({self._entries.tolist()!r}, "
            f"row_cuts={list(self.row_cuts)}, col_cuts={list(self.col_cuts)})"
        )


def _as_super(a) -> SuperMatrix:
    return a if isinstance(a, SuperMatrix) else SuperMatrix(a)


def transpose(a: SuperMatrix) -> SuperMatrix:
    """Transpose entries and swap the cut lists."""
    a = _as_super(a)
    return SuperMatrix(a.entries.T, a.scheme.transposed())


def pseudo_transpose(a: SuperMatrix) -> SuperMatrix:
    """Reflect across the anti-diagonal.

    For an ``m`` x ``n`` input the result is ``n`` x ``m`` with
    ``result[i, j] = a[m-1-j, n-1-i]`` (0-based). Cuts are reflected the
    same way, so applying this twice restores the scheme as well.
    """
    a = _as_super(a)
    m, n = a.shape
    scheme = PartitionScheme(
        tuple(sorted(n - c for c in a.col_cuts)),
        tuple(sorted(m - r for r in a.row_cuts)),
    )
    return SuperMatrix(a.entries[::-1, ::-1].T, scheme)


def add(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Entrywise sum of two identically partitioned supermatrices.

    Raises
    ------
    ShapeMismatch
        Shapes differ.
    SchemeMismatch
        Same shape but different schemes, so the blocks do not line up.
    """
    a, b = _as_super(a), _as_super(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    if a.scheme != b.scheme:
        raise SchemeMismatch(
            f"cannot add: schemes differ (row_cuts {list(a.row_cuts)} vs {list(b.row_cuts)}, "
            f"col_cuts {list(a.col_cuts)} vs {list(b.col_cuts)})"
        )
    return SuperMatrix(a.entries + b.entries, a.scheme)


def flat_product(x: np.ndarray, y: np.ndarray, s: Semiring) -> np.ndarray:
    """Semiring product of plain 2-D arrays."""
    if s is Semiring.PLUS_TIMES:
        return np.asarray(x, dtype=np.float64) @ np.asarray(y, dtype=np.float64)
    return _backend.maxmin_matmul(x, y)


def multiply(a: SuperMatrix, b: SuperMatrix, s: Semiring | str = Semiring.PLUS_TIMES) -> SuperMatrix:
    """Block-conformable product under semiring ``s``.

    The column cuts of ``a`` must equal the row cuts of ``b``. Block
    ``(i, k)`` of the result accumulates ``a[i, j] * b[j, k]`` over the
    shared block index ``j``. Minor and major products are both this
    operation; they differ only in the operands' schemes.

    Returns
    -------
    SuperMatrix
        Scheme ``(a.row_cuts, b.col_cuts)``.

    Raises
    ------
    ShapeMismatch
        ``a.cols != b.rows``.
    BlockMismatch
        Inner cut lists differ.
    """
    a, b = _as_super(a), _as_super(b)
    s = Semiring.parse(s)
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.col_cuts != b.row_cuts:
        raise BlockMismatch(
            f"not block conformable: left col_cuts {list(a.col_cuts)} "
            f"vs right row_cuts {list(b.row_cuts)}"
        )
    out = np.zeros((a.rows, b.cols))
    inner = a.scheme.col_bounds(a.cols)
    for r0, r1 in a.scheme.row_bounds(a.rows):
        for c0, c1 in b.scheme.col_bounds(b.cols):
            acc = out[r0:r1, c0:c1]
            for k0, k1 in inner:
                part = flat_product(a.entries[r0:r1, k0:k1], b.entries[k0:k1, c0:c1], s)
                if s is Semiring.PLUS_TIMES:
                    acc += part
                else:
                    np.maximum(acc, part, out=acc)
    return SuperMatrix(out, PartitionScheme(a.row_cuts, b.col_cuts))


def flat_equal(a: SuperMatrix, b: SuperMatrix, tol: float = 0.0) -> bool:
    """Same shape and entries, schemes ignored."""
    a, b = _as_super(a), _as_super(b)
    if a.shape != b.shape:
        return False
    if tol == 0.0:
        return bool(np.array_equal(a.entries, b.entries))
    return bool(np.allclose(a.entries, b.entries, rtol=0.0, atol=tol))


def _symmetric_blockwise(a: SuperMatrix) -> bool:
    nb = len(a.row_cuts) + 1
    for i in range(nb):
        d = a.block(i, i)
        if d.shape[0] != d.shape[1] or not np.array_equal(d, d.T):
            return False
        for j in range(i + 1, nb):
            if not np.array_equal(a.block(i, j), a.block(j, i).T):
                return False
    return True


def _symmetric_flat(a: SuperMatrix) -> bool:
    return bool(np.array_equal(a.entries, a.entries.T))


def is_symmetric_supermatrix(a: SuperMatrix, method: str = "blockwise") -> bool:
    """Square, nontrivially and symmetrically partitioned, and symmetric.

    Parameters
    ----------
    method : {"blockwise", "flat"}
        ``blockwise`` checks diagonal blocks for symmetry and each
        off-diagonal pair for ``block(i, j) == block(j, i).T``. ``flat``
        checks the whole matrix. Both require the same scheme conditions and
        always agree.
    """
    a = _as_super(a)
    if a.rows != a.cols:
        return False
    if a.scheme.is_trivial or a.row_cuts != a.col_cuts:
        return False
    if method == "blockwise":
        return _symmetric_blockwise(a)
    if method == "flat":
        return _symmetric_flat(a)
    raise ValueError(f"unknown method {method!r}")


def is_pseudo_symmetric(a: SuperMatrix) -> bool:
    """Square and equal to its own pseudo transpose; scheme ignored."""
    a = _as_super(a)
    if a.rows != a.cols:
        return False
    return bool(np.array_equal(a.entries, a.entries[::-1, ::-1].T))


def is_pseudo_symmetric_supermatrix(a: SuperMatrix) -> bool:
    """Pseudo symmetric entries under a pseudo partition."""
    a = _as_super(a)
    if not is_pseudo_symmetric(a):
        return False
    cls = classify_partition(a.scheme, a.rows, a.cols)
    return is_pseudo_class(cls, a.rows, a.cols)
