"""Multi-expert inference models and hidden-pattern iteration.

Four model kinds share one representation, :class:`ModelSpec`. The super
variants differ only in the connection matrix's partition shape, so each
kind has a single iteration routine.

The routines are:

* FCM: square signed map, ``X -> threshold(X M)`` with the initial on-set
  clamped.
* FRM: rectangular signed relation, iterated domain -> range -> domain.
* BAM: integer synaptic matrix, binary signals with memory on ties.
* FAM: fuzzy relation, recalled through max-min composition.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .algebra import FUZZY_TOL, Semiring, SuperMatrix, add, multiply, transpose
from .errors import (
    DimensionMismatch,
    KindMismatch,
    NonBinaryInitial,
    RangeViolation,
    ScaleViolation,
    SchemeMismatch,
)
from .fuzzy import StateDomain, SuperStateVector, bam_signal, threshold_update
from .partition import cut_sizes

MAX_STEPS_ENV = "SUPERFUZZ_MAX_STEPS"
FUZZY_MAX_STEPS = 1000
DEFAULT_TOL = 1e-9


class ModelKind(enum.Enum):
    FCM = "fcm"
    FRM = "frm"
    BAM = "bam"
    FAM = "fam"


class Variant(enum.Enum):
    PLAIN = "plain"
    SUPER_ROW = "super_row"
    SUPER_COLUMN = "super_column"
    SUPER_DIAGONAL = "super_diagonal"
    SUPER_FULL = "super_full"


class Side(enum.Enum):
    """Which space carries the stimulus. ``x``/``y`` alias domain/range."""

    DOMAIN = "domain"
    RANGE = "range"

    @classmethod
    def parse(cls, value) -> "Side":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        if key in ("domain", "x"):
            return cls.DOMAIN
        if key in ("range", "y"):
            return cls.RANGE
        raise ValueError(f"unknown side {value!r}; use domain, range, x or y")

    @property
    def other(self) -> "Side":
        return Side.RANGE if self is Side.DOMAIN else Side.DOMAIN


@dataclass(frozen=True, eq=False)
class ModelSpec:
    """A model's kind, connection supermatrix and metadata.

    Parameters
    ----------
    kind : ModelKind
    variant : Variant
    connection : SuperMatrix
        Rows index the domain (X) space and columns the range (Y) space.
        For an FCM both are the same node set.
    domain_labels, range_labels : sequence of sequence of str
        Node names grouped per expert. May be empty.
    scale : int, optional
        BAM fit range ``[-scale, scale]``.
    thresholds_u, thresholds_v : sequence of float, optional
        BAM thresholds for the X and Y spaces; zeros when omitted.
    combined : int
        Number of single-expert maps summed into this one. Entries of a
        combined FCM/FRM may range over ``[-combined, combined]``.
    """

    kind: ModelKind
    variant: Variant
    connection: SuperMatrix
    domain_labels: tuple = ()
    range_labels: tuple = ()
    scale: int | None = None
    thresholds_u: tuple | None = None
    thresholds_v: tuple | None = None
    combined: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        object.__setattr__(self, "variant", Variant(self.variant))
        conn = self.connection
        if not isinstance(conn, SuperMatrix):
            conn = SuperMatrix(conn)
        object.__setattr__(self, "connection", conn)
        object.__setattr__(self, "domain_labels", tuple(tuple(str(s) for s in g) for g in self.domain_labels))
        object.__setattr__(self, "range_labels", tuple(tuple(str(s) for s in g) for g in self.range_labels))
        for name in ("thresholds_u", "thresholds_v"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, tuple(float(v) for v in val))

    @property
    def rows(self) -> int:
        return self.connection.rows

    @property
    def cols(self) -> int:
        return self.connection.cols

    def side_length(self, side: Side) -> int:
        return self.rows if side is Side.DOMAIN else self.cols

    def side_cuts(self, side: Side) -> tuple[int, ...]:
        return self.connection.row_cuts if side is Side.DOMAIN else self.connection.col_cuts

    def side_labels(self, side: Side) -> tuple:
        if side is Side.DOMAIN or self.kind is ModelKind.FCM and not self.range_labels:
            return self.domain_labels
        return self.range_labels

    def thresholds(self, side: Side) -> np.ndarray:
        val = self.thresholds_u if side is Side.DOMAIN else self.thresholds_v
        n = self.side_length(side)
        return np.zeros(n) if val is None else np.asarray(val, dtype=np.float64)

    def __eq__(self, other):
        if not isinstance(other, ModelSpec):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.variant == other.variant
            and self.connection == other.connection
            and self.domain_labels == other.domain_labels
            and self.range_labels == other.range_labels
            and self.scale == other.scale
            and self.thresholds_u == other.thresholds_u
            and self.thresholds_v == other.thresholds_v
            and self.combined == other.combined
        )

    __hash__ = None


@dataclass(frozen=True)
class ModelIssue:
    """One violated model invariant, with a JSON path to the culprit."""

    code: str
    message: str
    path: str = "$"

    def __str__(self):
        return f"{self.code} at {self.path}: {self.message}"


def _entry_path(cols: int, i: int, j: int) -> str:
    return f"$.matrix.entries[{i * cols + j}]"


def validate_model(spec: ModelSpec) -> list[ModelIssue]:
    """Every structural problem with ``spec``; empty when valid.

    Checks the entry domain of the kind, FCM squareness and zero diagonal,
    the variant's scheme shape, zero off-diagonal blocks for the diagonal
    variant, label grouping and BAM scale and thresholds. Never raises.
    """
    issues: list[ModelIssue] = []
    m = spec.connection
    e = m.entries
    kind, variant = spec.kind, spec.variant

    # entry domain
    if kind in (ModelKind.FCM, ModelKind.FRM):
        bound = max(int(spec.combined), 1)
        bad = (e != np.round(e)) | (np.abs(e) > bound)
        allowed = "{-1, 0, 1}" if bound == 1 else f"integers in [-{bound}, {bound}]"
        for i, j in np.argwhere(bad):
            issues.append(ModelIssue("EntryDomain", f"entry {e[i, j]:g} not in {allowed}", _entry_path(m.cols, i, j)))
    elif kind is ModelKind.FAM:
        for i, j in np.argwhere((e < 0) | (e > 1)):
            issues.append(ModelIssue("EntryDomain", f"entry {e[i, j]:g} outside [0, 1]", _entry_path(m.cols, i, j)))
    elif kind is ModelKind.BAM:
        if spec.scale is None:
            issues.append(ModelIssue("ScaleMissing", "BAM models need a scale", "$.scale"))
        elif int(spec.scale) < 1:
            issues.append(ModelIssue("ScaleInvalid", f"scale {spec.scale} must be positive", "$.scale"))
        for name, n in (("thresholds_u", m.rows), ("thresholds_v", m.cols)):
            val = getattr(spec, name)
            if val is not None and len(val) != n:
                issues.append(ModelIssue("ThresholdLength", f"{name} has {len(val)} values, expected {n}", f"$.{name}"))
    if kind is not ModelKind.BAM:
        for name in ("thresholds_u", "thresholds_v"):
            if getattr(spec, name) is not None:
                issues.append(ModelIssue("UnexpectedField", f"{name} applies to BAM models only", f"$.{name}"))

    # FCM structure
    if kind is ModelKind.FCM:
        if m.rows != m.cols:
            issues.append(ModelIssue("NonSquareConnection", f"FCM matrix is {m.rows}x{m.cols}", "$.matrix"))
        elif m.row_cuts != m.col_cuts:
            issues.append(
                ModelIssue(
                    "NonSquareDiagonalBlock",
                    f"row_cuts {list(m.row_cuts)} differ from col_cuts {list(m.col_cuts)}",
                    "$.matrix.col_cuts",
                )
            )
        if m.rows == m.cols:
            for i in np.flatnonzero(np.diag(e) != 0):
                issues.append(
                    ModelIssue("ZeroDiagonalViolated", f"diagonal entry {i} is {e[i, i]:g}", _entry_path(m.cols, i, i))
                )

    # variant shape
    has_r, has_c = bool(m.row_cuts), bool(m.col_cuts)
    expected = {
        Variant.PLAIN: (False, False),
        Variant.SUPER_ROW: (False, True),
        Variant.SUPER_COLUMN: (True, False),
        Variant.SUPER_DIAGONAL: (True, True),
        Variant.SUPER_FULL: (True, True),
    }[variant]
    if (has_r, has_c) != expected:
        want = {
            (False, False): "no cuts",
            (False, True): "column cuts only",
            (True, False): "row cuts only",
            (True, True): "both row and column cuts",
        }[expected]
        issues.append(ModelIssue("VariantSchemeMismatch", f"variant {variant.value} needs {want}", "$.matrix"))
    if variant is Variant.SUPER_DIAGONAL and has_r and has_c:
        nr, nc = m.block_shape
        if nr != nc:
            issues.append(
                ModelIssue("VariantSchemeMismatch", f"diagonal variant needs a square block grid, got {nr}x{nc}", "$.matrix")
            )
        for i, j, blk in m.blocks():
            if i != j and np.any(blk != 0):
                issues.append(ModelIssue("OffDiagonalNonzero", f"block ({i + 1}, {j + 1}) is not zero", "$.matrix.entries"))

    # labels
    for name, labels, cuts, dim in (
        ("domain_labels", spec.domain_labels, m.row_cuts, m.rows),
        ("range_labels", spec.range_labels, m.col_cuts, m.cols),
    ):
        if not labels:
            continue
        sizes = [len(g) for g in labels]
        if sizes != cut_sizes(cuts, dim):
            issues.append(
                ModelIssue(
                    "LabelMismatch",
                    f"label groups of sizes {sizes} do not match blocks {cut_sizes(cuts, dim)}",
                    f"$.{name}",
                )
            )
    return issues


# run traces


@dataclass(frozen=True)
class FixedPoint:
    """The stimulus-side state stopped changing.

    ``partner`` is the matching state of the other space, if any.
    """

    state: SuperStateVector
    partner: SuperStateVector | None = None

    name = "fixed_point"


@dataclass(frozen=True)
class LimitCycle:
    """A round's state repeated an earlier, non-adjacent round.

    ``start_index`` is the first round of the cycle (round 0 is the initial
    state) and ``period`` its length in rounds.
    """

    start_index: int
    period: int

    name = "limit_cycle"


@dataclass(frozen=True)
class MaxStepsExceeded:
    steps: int

    name = "max_steps_exceeded"


Verdict = FixedPoint | LimitCycle | MaxStepsExceeded


@dataclass
class RunTrace:
    """States visited by a run, in order.

    Attributes
    ----------
    states : list of SuperStateVector
        For two-space models the spaces alternate, starting with the
        stimulus side.
    raw_values : list of ndarray or None
        Pre-threshold vector that produced each state; ``None`` for the
        initial state of FCM, FRM and FAM runs. For BAM it is the fit.
    spaces : list of Side
        Space of each state.
    verdict : FixedPoint, LimitCycle or MaxStepsExceeded
    """

    kind: ModelKind
    stimulus: Side
    states: list = field(default_factory=list)
    raw_values: list = field(default_factory=list)
    spaces: list = field(default_factory=list)
    verdict: object = None

    def _push(self, state, raw, space):
        self.states.append(state)
        self.raw_values.append(None if raw is None else np.asarray(raw, dtype=np.float64).copy())
        self.spaces.append(space)

    def states_on(self, side: Side | str) -> list[SuperStateVector]:
        side = Side.parse(side)
        return [s for s, sp in zip(self.states, self.spaces) if sp is side]

    def raws_on(self, side: Side | str) -> list:
        side = Side.parse(side)
        return [r for r, sp in zip(self.raw_values, self.spaces) if sp is side]

    @property
    def rounds(self) -> int:
        """Completed rounds (updates of the stimulus side)."""
        return len(self.states_on(self.stimulus)) - 1

    @property
    def converged(self) -> bool:
        return isinstance(self.verdict, (FixedPoint, LimitCycle))

    def hidden_pattern(self) -> dict:
        """Last state of each space visited."""
        out = {}
        for s, sp in zip(self.states, self.spaces):
            out[sp] = s
        return out


def default_max_steps(model: ModelSpec) -> int:
    """Step cap: the env override, else twice the state-space bound.

    Fuzzy models have an infinite state space and get a flat cap.
    """
    env = os.environ.get(MAX_STEPS_ENV)
    if env:
        try:
            val = int(env)
        except ValueError:
            raise ValueError(f"{MAX_STEPS_ENV} must be a positive integer, got {env!r}") from None
        if val < 1:
            raise ValueError(f"{MAX_STEPS_ENV} must be a positive integer, got {env!r}")
        return val
    if model.kind is ModelKind.FAM:
        return FUZZY_MAX_STEPS
    if model.kind is ModelKind.FCM:
        return 2 * 2**model.rows
    return 2 * 2 ** (model.rows + model.cols)


def _require_kind(model: ModelSpec, kind: ModelKind) -> None:
    if model.kind is not kind:
        raise KindMismatch(f"expected a {kind.value} model, got {model.kind.value}")


def _initial_values(model: ModelSpec, initial, side: Side):
    if isinstance(initial, SuperStateVector):
        vals, cuts = initial.values, initial.cuts
    else:
        vals, cuts = np.asarray(initial, dtype=np.float64).ravel(), ()
    n = model.side_length(side)
    if vals.size != n:
        raise DimensionMismatch(f"initial vector has length {vals.size}, the {side.value} space has {n}")
    want = model.side_cuts(side)
    if cuts and cuts != want:
        raise SchemeMismatch(f"initial vector cuts {list(cuts)} differ from the model's {side.value} cuts {list(want)}")
    return vals, want


def _check_binary(vals: np.ndarray) -> None:
    bad = ~np.isin(vals, (0.0, 1.0))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise NonBinaryInitial(f"initial value {vals[i]:g} at index {i} is not 0 or 1")


def _resolve_steps(model: ModelSpec, max_steps: int | None) -> int:
    if max_steps is None:
        return default_max_steps(model)
    if max_steps < 1:
        raise ValueError(f"max_steps must be positive, got {max_steps}")
    return int(max_steps)


def _vecmat(vec: SuperStateVector, m: SuperMatrix, s: Semiring = Semiring.PLUS_TIMES) -> np.ndarray:
    return multiply(vec.as_supermatrix(), m, s).entries.ravel()


def _loop(trace: RunTrace, start_key, advance: Callable[[], tuple], max_steps: int, same: Callable | None = None):
    """Drive ``advance`` until its key repeats.

    ``advance`` performs one round, pushing states onto ``trace``, and
    returns ``(key, stimulus_state, partner_state)``. Keys are compared
    exactly through a dict, or with ``same`` by linear scan.
    """
    keys = [start_key]
    index = {start_key: 0} if same is None else None
    for step in range(1, max_steps + 1):
        key, state, partner = advance()
        if same is None:
            j = index.get(key)
        else:
            j = next((i for i in range(len(keys) - 1, -1, -1) if same(keys[i], key)), None)
        if j is not None:
            if j == len(keys) - 1:
                trace.verdict = FixedPoint(state, partner)
            else:
                trace.verdict = LimitCycle(j, len(keys) - j)
            return trace
        keys.append(key)
        if index is not None:
            index[key] = step
    trace.verdict = MaxStepsExceeded(max_steps)
    return trace


def fcm_hidden_pattern(model: ModelSpec, initial, max_steps: int | None = None) -> RunTrace:
    """Iterate an FCM from a binary stimulus until a state repeats.

    Each step multiplies the state by the connection matrix with ordinary
    arithmetic, thresholds positives to 1 and holds the initially-on nodes
    at 1.

    Raises
    ------
    KindMismatch, DimensionMismatch, NonBinaryInitial
    """
    _require_kind(model, ModelKind.FCM)
    if model.rows != model.cols:
        raise DimensionMismatch(f"FCM connection must be square, got {model.rows}x{model.cols}")
    vals, cuts = _initial_values(model, initial, Side.DOMAIN)
    _check_binary(vals)
    x = SuperStateVector(vals, cuts, StateDomain.BINARY)
    clamp = x.on_set()
    m = model.connection
    trace = RunTrace(ModelKind.FCM, Side.DOMAIN)
    trace._push(x, None, Side.DOMAIN)
    cur = [x]

    def advance():
        raw = _vecmat(cur[0], m)
        nxt = threshold_update(raw, clamp, cuts)
        trace._push(nxt, raw, Side.DOMAIN)
        cur[0] = nxt
        return nxt.values.tobytes(), nxt, None

    return _loop(trace, x.values.tobytes(), advance, _resolve_steps(model, max_steps))


def frm_hidden_pattern(model: ModelSpec, initial, side: Side | str = Side.DOMAIN, max_steps: int | None = None) -> RunTrace:
    """Bounce a binary stimulus between the domain and range spaces.

    Only the stimulus side is clamped; the opposite space is thresholded
    without updating. The run stops when the stimulus-side state repeats,
    which also fixes the pair since the other side is a function of it.
    """
    _require_kind(model, ModelKind.FRM)
    side = Side.parse(side)
    vals, cuts = _initial_values(model, initial, side)
    _check_binary(vals)
    start = SuperStateVector(vals, cuts, StateDomain.BINARY)
    clamp = start.on_set()
    fwd = model.connection if side is Side.DOMAIN else transpose(model.connection)
    back = transpose(fwd)
    trace = RunTrace(ModelKind.FRM, side)
    trace._push(start, None, side)
    cur = [start]

    def advance():
        raw_o = _vecmat(cur[0], fwd)
        other = threshold_update(raw_o, (), fwd.col_cuts)
        trace._push(other, raw_o, side.other)
        raw_s = _vecmat(other, back)
        nxt = threshold_update(raw_s, clamp, back.col_cuts)
        trace._push(nxt, raw_s, side)
        cur[0] = nxt
        return nxt.values.tobytes(), nxt, other

    return _loop(trace, start.values.tobytes(), advance, _resolve_steps(model, max_steps))


def bam_recall(
    model: ModelSpec,
    initial_fit,
    side: Side | str = Side.DOMAIN,
    max_steps: int | None = None,
    previous_other=None,
) -> RunTrace:
    """Synchronous discrete BAM recall to bidirectional stability.

    The fit is turned into a signal with an all-zero previous state, then
    signals are passed through ``M`` and ``M^t`` alternately. Ties with
    the threshold keep the neuron's previous signal. External inputs are
    taken as zero.

    Parameters
    ----------
    previous_other : array_like, optional
        Starting signal of the opposite space, used only by the tie rule;
        zeros by default.

    Raises
    ------
    ScaleViolation
        A fit value lies outside the model's ``[-scale, scale]``.
    """
    _require_kind(model, ModelKind.BAM)
    side = Side.parse(side)
    vals, cuts = _initial_values(model, initial_fit, side)
    if model.scale is not None:
        bad = np.abs(vals) > model.scale
        if bad.any():
            i = int(np.flatnonzero(bad)[0])
            raise ScaleViolation(f"fit value {vals[i]:g} at index {i} outside [-{model.scale}, {model.scale}]")
    fwd = model.connection if side is Side.DOMAIN else transpose(model.connection)
    back = transpose(fwd)
    u_s, u_o = model.thresholds(side), model.thresholds(side.other)
    n_o = model.side_length(side.other)
    if previous_other is None:
        prev_o = SuperStateVector(np.zeros(n_o), fwd.col_cuts)
    else:
        p = np.asarray(previous_other, dtype=np.float64).ravel()
        if p.size != n_o:
            raise DimensionMismatch(f"previous_other has length {p.size}, expected {n_o}")
        _check_binary(p)
        prev_o = SuperStateVector(p, fwd.col_cuts)
    s0 = bam_signal(vals, np.zeros(vals.size), u_s, cuts)
    trace = RunTrace(ModelKind.BAM, side)
    trace._push(s0, vals, side)
    cur = [s0, prev_o]

    def advance():
        s, o = cur
        raw_o = _vecmat(s, fwd)
        o2 = bam_signal(raw_o, o, u_o, fwd.col_cuts)
        trace._push(o2, raw_o, side.other)
        raw_s = _vecmat(o2, back)
        s2 = bam_signal(raw_s, s, u_s, back.col_cuts)
        trace._push(s2, raw_s, side)
        cur[:] = [s2, o2]
        return s2.values.tobytes() + o2.values.tobytes(), s2, o2

    key0 = s0.values.tobytes() + prev_o.values.tobytes()
    return _loop(trace, key0, advance, _resolve_steps(model, max_steps))


def fam_recall(
    model: ModelSpec,
    fit,
    side: Side | str = Side.DOMAIN,
    max_steps: int | None = None,
    tol: float = DEFAULT_TOL,
) -> RunTrace:
    """Max-min recall of a fuzzy fit vector until it settles.

    Alternates ``B = A o F`` and ``A = B o F^t``. The run is at a fixed
    point once consecutive stimulus-side vectors differ by at most ``tol``
    in max-norm; a match with an older round is reported as a limit cycle.

    Raises
    ------
    RangeViolation
        A fit value lies outside [0, 1].
    """
    _require_kind(model, ModelKind.FAM)
    side = Side.parse(side)
    vals, cuts = _initial_values(model, fit, side)
    bad = (vals < 0) | (vals > 1)
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise RangeViolation(f"fit value {vals[i]:g} at index {i} outside [0, 1]")
    if tol < 0:
        raise ValueError("tol must be non-negative")
    a0 = SuperStateVector(vals, cuts, StateDomain.FUZZY)
    fwd = model.connection if side is Side.DOMAIN else transpose(model.connection)
    back = transpose(fwd)
    trace = RunTrace(ModelKind.FAM, side)
    trace._push(a0, None, side)
    cur = [a0]

    def advance():
        raw_o = _vecmat(cur[0], fwd, Semiring.MAX_MIN)
        other = SuperStateVector(raw_o, fwd.col_cuts, StateDomain.FUZZY)
        trace._push(other, raw_o, side.other)
        raw_s = _vecmat(other, back, Semiring.MAX_MIN)
        nxt = SuperStateVector(raw_s, back.col_cuts, StateDomain.FUZZY)
        trace._push(nxt, raw_s, side)
        cur[0] = nxt
        return raw_s, nxt, other

    def same(p, q):
        return float(np.max(np.abs(p - q))) <= tol

    return _loop(trace, vals, advance, _resolve_steps(model, max_steps), same)


def run_model(model: ModelSpec, initial, side=None, max_steps: int | None = None, tol: float = DEFAULT_TOL) -> RunTrace:
    """Dispatch to the iteration routine for ``model.kind``."""
    if model.kind is ModelKind.FCM:
        if side is not None and Side.parse(side) is not Side.DOMAIN:
            raise ValueError("FCM models have a single space; side does not apply")
        return fcm_hidden_pattern(model, initial, max_steps)
    if side is None:
        raise ValueError(f"{model.kind.value} models need a side")
    if model.kind is ModelKind.FRM:
        return frm_hidden_pattern(model, initial, side, max_steps)
    if model.kind is ModelKind.BAM:
        return bam_recall(model, initial, side, max_steps)
    return fam_recall(model, initial, side, max_steps, tol)


def combine_models(models: Sequence[ModelSpec]) -> ModelSpec:
    """Sum the connection matrices of several FCMs or FRMs.

    Entries are left as integer sums, so opposing opinions cancel to 0 and
    agreeing ones reinforce beyond 1.

    Raises
    ------
    KindMismatch
        Mixed kinds, or a kind other than FCM/FRM.
    ShapeMismatch, SchemeMismatch
        From :func:`superfuzz.algebra.add`.
    """
    if not models:
        raise ValueError("combine_models needs at least one model")
    first = models[0]
    if first.kind not in (ModelKind.FCM, ModelKind.FRM):
        raise KindMismatch(f"only FCM and FRM models can be combined, got {first.kind.value}")
    conn = first.connection
    total = first.combined
    for other in models[1:]:
        if other.kind is not first.kind:
            raise KindMismatch(f"cannot combine {first.kind.value} with {other.kind.value}")
        conn = add(conn, other.connection)
        total += other.combined
    return ModelSpec(
        first.kind,
        first.variant,
        conn,
        first.domain_labels,
        first.range_labels,
        combined=total,
    )


def default_labels(model: ModelSpec, side: Side) -> tuple:
    """``X<block>_<i>`` style names for unlabeled spaces."""
    prefix = "X" if side is Side.DOMAIN else "Y"
    sizes = cut_sizes(model.side_cuts(side), model.side_length(side))
    return tuple(tuple(f"{prefix}{b + 1}_{i + 1}" for i in range(n)) for b, n in enumerate(sizes))


__all__ = [
    "FUZZY_TOL",
    "MAX_STEPS_ENV",
    "ModelKind",
    "Variant",
    "Side",
    "ModelSpec",
    "ModelIssue",
    "FixedPoint",
    "LimitCycle",
    "MaxStepsExceeded",
    "RunTrace",
    "validate_model",
    "default_max_steps",
    "fcm_hidden_pattern",
    "frm_hidden_pattern",
    "bam_recall",
    "fam_recall",
    "run_model",
    "combine_models",
    "default_labels",
]
