"""Fuzzy matrices, state vectors and the fuzzy-specific operations.

State vectors carry their own cut list (one block per expert) and a value
domain. The thresholding helpers here are shared by every model in
:mod:`superfuzz.models`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .algebra import Semiring, SuperMatrix, multiply, transpose
from .errors import DomainViolation, RangeViolation, ScaleViolation, SchemeMismatch, ShapeMismatch
from .partition import PartitionScheme, validate_scheme


class FuzzyMatrix(SuperMatrix):
    """SuperMatrix whose entries all lie in [0, 1].

    Raises
    ------
    RangeViolation
        At construction, if any entry is outside [0, 1].
    """

    __slots__ = ()

    def __init__(self, entries, scheme: PartitionScheme | None = None):
        super().__init__(entries, scheme)
        bad = np.argwhere((self.entries < 0) | (self.entries > 1))
        if bad.size:
            i, j = bad[0]
            raise RangeViolation(f"entry ({i}, {j}) = {self.entries[i, j]} outside [0, 1]")


def as_fuzzy(a) -> FuzzyMatrix:
    if isinstance(a, FuzzyMatrix):
        return a
    if isinstance(a, SuperMatrix):
        return FuzzyMatrix(a.entries, a.scheme)
    return FuzzyMatrix(a)


class StateDomain(enum.Enum):
    BINARY = "binary"
    BIPOLAR = "bipolar"
    SCALED = "scaled"
    FUZZY = "fuzzy"


@dataclass(frozen=True, eq=False)
class SuperStateVector:
    """A partitioned row vector with a declared value domain.

    Parameters
    ----------
    values : array_like
        1-D values; stored as a read-only float64 array.
    cuts : sequence of int
        Block boundaries, one block per expert.
    domain : StateDomain
    scale : int, optional
        Required for ``SCALED``; values must lie in ``[-scale, scale]``.
    """

    values: np.ndarray
    cuts: tuple[int, ...] = ()
    domain: StateDomain = StateDomain.BINARY
    scale: int | None = None

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.float64).ravel()
        vals.setflags(write=False)
        domain = StateDomain(self.domain)
        cuts = tuple(int(c) for c in self.cuts)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "cuts", cuts)
        object.__setattr__(self, "domain", domain)
        if vals.size == 0:
            raise ShapeMismatch("state vector is empty")
        validate_scheme(PartitionScheme((), cuts), 1, vals.size)
        _check_domain(vals, domain, self.scale)

    def __len__(self):
        return self.values.size

    def __eq__(self, other):
        if not isinstance(other, SuperStateVector):
            return NotImplemented
        return (
            self.cuts == other.cuts
            and self.domain == other.domain
            and self.scale == other.scale
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.values.tobytes(), self.cuts, self.domain, self.scale))

    def as_supermatrix(self) -> SuperMatrix:
        return SuperMatrix(self.values.reshape(1, -1), PartitionScheme((), self.cuts))

    def blocks(self) -> list[np.ndarray]:
        edges = [0, *self.cuts, self.values.size]
        return [self.values[a:b] for a, b in zip(edges[:-1], edges[1:])]

    def on_set(self) -> frozenset[int]:
        """0-based indices of positive coordinates."""
        return frozenset(int(i) for i in np.flatnonzero(self.values > 0))

    def with_cuts(self, cuts: Sequence[int]) -> "SuperStateVector":
        return SuperStateVector(self.values, tuple(cuts), self.domain, self.scale)


def _check_domain(vals: np.ndarray, domain: StateDomain, scale) -> None:
    if domain is StateDomain.BINARY:
        bad = ~np.isin(vals, (0.0, 1.0))
        if bad.any():
            raise DomainViolation(f"binary state has value {vals[bad][0]} at index {np.flatnonzero(bad)[0]}")
    elif domain is StateDomain.BIPOLAR:
        bad = ~np.isin(vals, (-1.0, 0.0, 1.0))
        if bad.any():
            raise DomainViolation(f"bipolar state has value {vals[bad][0]} at index {np.flatnonzero(bad)[0]}")
    elif domain is StateDomain.SCALED:
        if scale is None:
            raise DomainViolation("scaled state needs a scale")
        if np.any(vals != np.round(vals)):
            raise DomainViolation("scaled state values must be integers")
        bad = np.abs(vals) > scale
        if bad.any():
            i = np.flatnonzero(bad)[0]
            raise ScaleViolation(f"value {vals[i]:g} at index {i} outside [-{scale}, {scale}]")
    elif domain is StateDomain.FUZZY:
        bad = (vals < 0) | (vals > 1)
        if bad.any():
            i = np.flatnonzero(bad)[0]
            raise RangeViolation(f"fuzzy value {vals[i]:g} at index {i} outside [0, 1]")


def _values_and_cuts(raw, cuts):
    if isinstance(raw, SuperStateVector):
        return raw.values, raw.cuts if cuts is None else tuple(cuts)
    if isinstance(raw, SuperMatrix):
        if raw.rows != 1:
            raise ShapeMismatch(f"expected a row vector, got {raw.rows}x{raw.cols}")
        return raw.entries.ravel(), raw.col_cuts if cuts is None else tuple(cuts)
    return np.asarray(raw, dtype=np.float64).ravel(), tuple(cuts or ())


def super_pseudo_product(a) -> FuzzyMatrix:
    """Outer min of a fuzzy row supervector with itself.

    Parameters
    ----------
    a : SuperMatrix or SuperStateVector
        A 1 x n fuzzy vector with column cuts ``C`` (an n x 1 column is
        accepted and read through its row cuts).

    Returns
    -------
    FuzzyMatrix
        ``n`` x ``n`` with entry ``min(a_i, a_j)`` and scheme ``(C, C)``.
        Always flat-symmetric, with ``a`` on the diagonal.
    """
    if isinstance(a, SuperMatrix) and a.cols == 1 and a.rows > 1:
        a = transpose(a)
    vals, cuts = _values_and_cuts(a, None)
    if ((vals < 0) | (vals > 1)).any():
        raise RangeViolation("super pseudo product needs entries in [0, 1]")
    return FuzzyMatrix(np.minimum.outer(vals, vals), PartitionScheme(cuts, cuts))


def minor_product_moment(x) -> FuzzyMatrix:
    """Max-min product of a special row or column supermatrix with its transpose.

    A special row matrix (row cuts empty) gives ``x x^t``; a special column
    matrix (column cuts empty, row cuts present) gives ``x^t x``. The
    result is symmetric and its diagonal holds the row (or column) maxima.

    Raises
    ------
    SchemeMismatch
        ``x`` has both row and column cuts.
    """
    x = as_fuzzy(x)
    if not x.row_cuts:
        out = multiply(x, transpose(x), Semiring.MAX_MIN)
    elif not x.col_cuts:
        out = multiply(transpose(x), x, Semiring.MAX_MIN)
    else:
        raise SchemeMismatch(
            f"minor product moment needs a special row or column matrix; "
            f"got row_cuts {list(x.row_cuts)} and col_cuts {list(x.col_cuts)}"
        )
    return FuzzyMatrix(out.entries, out.scheme)


def clamp_mask(clamp: Iterable[int], n: int) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    for i in clamp:
        if not 0 <= i < n:
            raise IndexError(f"clamp index {i} out of range for length {n}")
        mask[i] = True
    return mask


def threshold_update(raw, clamp: Iterable[int] = (), cuts: Sequence[int] | None = None) -> SuperStateVector:
    """Threshold a raw vector and re-apply the clamped coordinates.

    Parameters
    ----------
    raw : array_like or SuperStateVector
        Pre-threshold values. A SuperStateVector contributes its cuts.
    clamp : iterable of int
        0-based coordinates held on at every step (the initial stimulus).
        Pass nothing for the space that did not receive the stimulus.
    cuts : sequence of int, optional
        Overrides the cuts taken from ``raw``.

    Returns
    -------
    SuperStateVector
        Binary: 1 where ``raw > 0`` or the coordinate is clamped, else 0.
    """
    vals, cuts = _values_and_cuts(raw, cuts)
    out = _backend.threshold_update(vals, clamp_mask(clamp, vals.size))
    return SuperStateVector(out, cuts, StateDomain.BINARY)


def bam_signal(raw, previous, thresholds=0.0, cuts: Sequence[int] | None = None) -> SuperStateVector:
    """Binary threshold signal with memory.

    ``out_i`` is 1 when ``raw_i > U_i``, ``previous_i`` when they are equal
    and 0 when ``raw_i < U_i``.

    Parameters
    ----------
    raw : array_like or SuperStateVector
    previous : array_like or SuperStateVector
        The previous binary signal of the same space.
    thresholds : float or array_like
        ``U``; a scalar is broadcast.
    """
    vals, cuts = _values_and_cuts(raw, cuts)
    prev = previous.values if isinstance(previous, SuperStateVector) else np.asarray(previous, dtype=np.float64).ravel()
    u = np.broadcast_to(np.asarray(thresholds, dtype=np.float64), vals.shape)
    if prev.size != vals.size:
        raise ShapeMismatch(f"previous has length {prev.size}, raw has {vals.size}")
    if not np.isin(prev, (0.0, 1.0)).all():
        raise DomainViolation("previous signal must be binary")
    out = _backend.bam_signal(vals, prev, u)
    return SuperStateVector(out, cuts, StateDomain.BINARY)
