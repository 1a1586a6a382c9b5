"""Partition schemes for supermatrices.

A scheme is a pair of cut lists. A cut at ``k`` (1-based) separates row
``k - 1`` from row ``k`` in 1-based numbering, i.e. it sits just below the
``k``-th row. Cuts for an ``n``-row matrix therefore live in ``1 .. n-1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateCut, EmptyBlockList, OutOfRangeCut, UnsortedCuts


@dataclass(frozen=True)
class PartitionScheme:
    """Row and column cut positions.

    Parameters
    ----------
    row_cuts, col_cuts : sequence of int
        Strictly increasing 1-based cut positions. Converted to tuples.

    Notes
    -----
    Ordering is checked here. Range depends on the matrix dimensions and is
    checked by :func:`validate_scheme`.
    """

    row_cuts: tuple[int, ...] = ()
    col_cuts: tuple[int, ...] = ()

    def __post_init__(self):
        rc = tuple(int(c) for c in self.row_cuts)
        cc = tuple(int(c) for c in self.col_cuts)
        _check_order(rc, "row")
        _check_order(cc, "col")
        object.__setattr__(self, "row_cuts", rc)
        object.__setattr__(self, "col_cuts", cc)

    @property
    def is_trivial(self) -> bool:
        return not self.row_cuts and not self.col_cuts

    def transposed(self) -> "PartitionScheme":
        return PartitionScheme(self.col_cuts, self.row_cuts)

    def row_bounds(self, rows: int) -> list[tuple[int, int]]:
        """0-based half-open row ranges of each block row."""
        return _bounds(self.row_cuts, rows)

    def col_bounds(self, cols: int) -> list[tuple[int, int]]:
        """0-based half-open column ranges of each block column."""
        return _bounds(self.col_cuts, cols)

    def to_dict(self) -> dict:
        return {"row_cuts": list(self.row_cuts), "col_cuts": list(self.col_cuts)}


class PartitionClass(enum.Enum):
    TRIVIAL = "Trivial"
    GENERAL = "General"
    SYMMETRIC = "Symmetric"
    PSEUDO = "Pseudo"
    SYMMETRIC_AND_PSEUDO = "SymmetricAndPseudo"
    CELL = "Cell"


def _check_order(cuts: Sequence[int], which: str) -> None:
    for a, b in zip(cuts, cuts[1:]):
        if a == b:
            raise DuplicateCut(f"{which} cut {a} repeated in {list(cuts)}")
        if a > b:
            raise UnsortedCuts(f"{which} cuts not increasing: {list(cuts)}")


def _bounds(cuts: Sequence[int], dim: int) -> list[tuple[int, int]]:
    edges = [0, *cuts, dim]
    return list(zip(edges[:-1], edges[1:]))


TRIVIAL = PartitionScheme()


def cut_sizes(cuts: Sequence[int], dim: int) -> list[int]:
    """Block lengths induced by ``cuts`` on a dimension of size ``dim``."""
    return [hi - lo for lo, hi in _bounds(cuts, dim)]


def cuts_from_sizes(sizes: Iterable[int]) -> tuple[int, ...]:
    """Inverse of :func:`cut_sizes`: cumulative boundaries, last one dropped."""
    acc = list(itertools.accumulate(int(s) for s in sizes))
    return tuple(acc[:-1])


def validate_scheme(scheme: PartitionScheme, rows: int, cols: int) -> None:
    """Check ``scheme`` against a ``rows`` x ``cols`` matrix.

    Raises
    ------
    OutOfRangeCut
        A cut lies outside ``1 .. dim-1``.
    UnsortedCuts, DuplicateCut
        Raised when building the scheme, so only reachable through
        hand-made objects that skipped ``__post_init__``.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"dimensions must be positive, got {rows}x{cols}")
    for cuts, dim, which in ((scheme.row_cuts, rows, "row"), (scheme.col_cuts, cols, "col")):
        _check_order(cuts, which)
        for c in cuts:
            if not 1 <= c <= dim - 1:
                raise OutOfRangeCut(f"{which} cut {c} outside 1..{dim - 1}")


def classify_partition(scheme: PartitionScheme, n: int, m: int) -> PartitionClass:
    """Most specific class of ``scheme`` on an ``n`` x ``m`` matrix.

    Cell wins over everything else; the empty scheme is Trivial even for a
    1 x 1 matrix where it is also, vacuously, the cell partition.
    """
    validate_scheme(scheme, n, m)
    rows, cols = set(scheme.row_cuts), set(scheme.col_cuts)
    if not rows and not cols:
        return PartitionClass.TRIVIAL
    if rows == set(range(1, n)) and cols == set(range(1, m)):
        return PartitionClass.CELL
    if n != m:
        return PartitionClass.GENERAL
    sym = rows == cols
    pseudo = rows == {n - c for c in cols}
    if sym and pseudo:
        return PartitionClass.SYMMETRIC_AND_PSEUDO
    if sym:
        return PartitionClass.SYMMETRIC
    if pseudo:
        return PartitionClass.PSEUDO
    return PartitionClass.GENERAL


def is_symmetric_class(cls: PartitionClass, n: int, m: int) -> bool:
    """True for classes whose row and column cuts coincide on a square matrix."""
    if n != m:
        return False
    return cls in (PartitionClass.SYMMETRIC, PartitionClass.SYMMETRIC_AND_PSEUDO, PartitionClass.CELL)


def is_pseudo_class(cls: PartitionClass, n: int, m: int) -> bool:
    """True for classes satisfying the pseudo (anti-diagonal) cut condition."""
    if n != m:
        return False
    return cls in (PartitionClass.PSEUDO, PartitionClass.SYMMETRIC_AND_PSEUDO, PartitionClass.CELL)


def _subsets(k: int) -> list[tuple[int, ...]]:
    # lexicographic order on sorted tuples over 1..k
    out = [()]
    items = range(1, k + 1)
    for r in range(1, k + 1):
        out.extend(itertools.combinations(items, r))
    return sorted(out)


def enumerate_partitions(n: int, m: int) -> list[PartitionScheme]:
    """All nontrivial schemes of an ``n`` x ``m`` matrix.

    Returns
    -------
    list of PartitionScheme
        ``2**(n-1) * 2**(m-1) - 1`` schemes, ordered lexicographically on
        ``(row_cuts, col_cuts)``.
    """
    if n < 1 or m < 1:
        raise ValueError(f"dimensions must be positive, got {n}x{m}")
    out = []
    for r in _subsets(n - 1):
        for c in _subsets(m - 1):
            if r or c:
                out.append(PartitionScheme(r, c))
    return out


def count_partitions(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise ValueError(f"dimensions must be positive, got {n}x{m}")
    return 2 ** (n - 1) * 2 ** (m - 1) - 1


def count_symmetric_partitions(n: int) -> int:
    """Number of nontrivial symmetric schemes of an ``n`` x ``n`` matrix."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    return 2 ** (n - 1) - 1


def count_pseudo_partitions(n: int) -> int:
    """Number of nontrivial pseudo schemes of an ``n`` x ``n`` matrix.

    The column cuts determine the row cuts, so this matches the symmetric
    count.
    """
    return count_symmetric_partitions(n)


def super_diagonal(blocks):
    """Place ``blocks`` along the diagonal of a zero supermatrix.

    Parameters
    ----------
    blocks : sequence of array_like or SuperMatrix
        Nonempty 2-D blocks. Any cuts a SuperMatrix block carries are
        ignored; only its entries are used.

    Returns
    -------
    SuperMatrix
        Cuts sit at the cumulative block boundaries.
    """
    from .algebra import SuperMatrix

    if len(blocks) == 0:
        raise EmptyBlockList("super_diagonal needs at least one block")
    arrays = []
    for b in blocks:
        arr = b.entries if isinstance(b, SuperMatrix) else np.atleast_2d(np.asarray(b, dtype=float))
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError(f"blocks must be nonempty 2-D arrays, got shape {arr.shape}")
        arrays.append(arr)
    rows = sum(a.shape[0] for a in arrays)
    cols = sum(a.shape[1] for a in arrays)
    out = np.zeros((rows, cols))
    i = j = 0
    for a in arrays:
        out[i : i + a.shape[0], j : j + a.shape[1]] = a
        i += a.shape[0]
        j += a.shape[1]
    scheme = PartitionScheme(
        cuts_from_sizes(a.shape[0] for a in arrays),
        cuts_from_sizes(a.shape[1] for a in arrays),
    )
    return SuperMatrix(out, scheme)
