"""Text and JSON renderings of vectors, matrices and run traces."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .algebra import SuperMatrix
from .jsonio import number, numbers, state_to_dict
from .models import FixedPoint, LimitCycle, MaxStepsExceeded, ModelSpec, RunTrace, Side, default_labels
from .partition import cut_sizes


def format_value(x: float) -> str:
    """Integral values without a decimal point, others in shortest form."""
    return repr(number(x))


def render_vector(values, cuts: Sequence[int] = ()) -> str:
    """``[a b | c d]`` with a bar at exactly each cut."""
    vals = np.asarray(values, dtype=np.float64).ravel()
    cutset = set(cuts)
    parts = []
    for i, v in enumerate(vals):
        if i in cutset:
            parts.append("|")
        parts.append(format_value(v))
    return "[" + " ".join(parts) + "]"


def render_matrix(m: SuperMatrix) -> str:
    """Rows with column bars and a dashed rule at each row cut."""
    lines = [render_vector(row, m.col_cuts) for row in m.entries]
    width = max(len(s) for s in lines)
    out = []
    for i, line in enumerate(lines):
        if i in m.row_cuts:
            out.append("-" * width)
        out.append(line)
    return "\n".join(out)


def verdict_text(trace: RunTrace) -> str:
    v = trace.verdict
    if isinstance(v, FixedPoint):
        return f"fixed point after {trace.rounds} round(s)"
    if isinstance(v, LimitCycle):
        return f"limit cycle of period {v.period} starting at round {v.start_index}"
    if isinstance(v, MaxStepsExceeded):
        return f"no equilibrium within {v.steps} step(s)"
    return "not run"


def verdict_dict(trace: RunTrace) -> dict:
    v = trace.verdict
    if isinstance(v, FixedPoint):
        return {"type": "fixed_point", "rounds": trace.rounds}
    if isinstance(v, LimitCycle):
        return {"type": "limit_cycle", "start_index": v.start_index, "period": v.period, "rounds": trace.rounds}
    return {"type": "max_steps_exceeded", "steps": v.steps, "rounds": trace.rounds}


def _labels(model: ModelSpec, side: Side):
    labels = model.side_labels(side)
    sizes = cut_sizes(model.side_cuts(side), model.side_length(side))
    if [len(g) for g in labels] != sizes:
        labels = default_labels(model, side)
    return labels


def expert_breakdown(model: ModelSpec, side: Side, state) -> list[dict]:
    """Per-block list of the labels whose nodes are on (nonzero)."""
    labels = _labels(model, side)
    out = []
    for b, (group, block) in enumerate(zip(labels, state.blocks())):
        entries = [(name, float(v)) for name, v in zip(group, block) if v != 0]
        out.append({"block": b + 1, "on": [name for name, _ in entries], "values": [number(v) for _, v in entries]})
    return out


def text_report(model: ModelSpec, trace: RunTrace) -> str:
    lines = [
        f"model: {model.kind.value} ({model.variant.value}) {model.rows}x{model.cols}, "
        f"row cuts {list(model.connection.row_cuts)}, col cuts {list(model.connection.col_cuts)}",
        f"stimulus: {trace.stimulus.value}",
    ]
    count = {Side.DOMAIN: 0, Side.RANGE: 0}
    for state, raw, space in zip(trace.states, trace.raw_values, trace.spaces):
        k = count[space]
        count[space] += 1
        name = space.value
        if raw is not None:
            lines.append(f"step {k} {name} raw:   {render_vector(raw, state.cuts)}")
        lines.append(f"step {k} {name} state: {render_vector(state.values, state.cuts)}")
    lines.append(f"verdict: {verdict_text(trace)}")
    for space, state in trace.hidden_pattern().items():
        lines.append(f"hidden pattern {space.value}: {render_vector(state.values, state.cuts)}")
        for item in expert_breakdown(model, space, state):
            on = ", ".join(item["on"]) if item["on"] else "none"
            lines.append(f"  expert {item['block']}: {on}")
    return "\n".join(lines) + "\n"


def json_report(model: ModelSpec, trace: RunTrace, request: dict) -> dict:
    steps = []
    count = {Side.DOMAIN: 0, Side.RANGE: 0}
    for state, raw, space in zip(trace.states, trace.raw_values, trace.spaces):
        steps.append(
            {
                "space": space.value,
                "index": count[space],
                "raw": None if raw is None else numbers(raw),
                "state": state_to_dict(state),
                "text": render_vector(state.values, state.cuts),
            }
        )
        count[space] += 1
    hidden = {
        space.value: {"state": state_to_dict(state), "experts": expert_breakdown(model, space, state)}
        for space, state in trace.hidden_pattern().items()
    }
    return {"request": request, "steps": steps, "verdict": verdict_dict(trace), "hidden_pattern": hidden}
