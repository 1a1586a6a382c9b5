"""JSON loading and canonical serialization.

Formats::

    matrix  {"rows", "cols", "row_cuts", "col_cuts", "entries"}
    state   {"domain", "scale"?, "cuts", "values"}
    model   {"kind", "variant", "matrix", "domain_labels", "range_labels",
             "scale"?, "thresholds_u"?, "thresholds_v"?}

Numbers are written in shortest round-trip form, with integral values
written as integers.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import SuperMatrix
from .errors import ParseError, SchemaError, SchemeError, SuperfuzzError, ValidationError
from .fuzzy import StateDomain, SuperStateVector
from .models import ModelKind, ModelSpec, Variant, validate_model
from .partition import PartitionScheme, validate_scheme


def number(x: float):
    """Shortest JSON-friendly form of ``x``: int when integral."""
    x = float(x)
    if x.is_integer() and abs(x) < 2**53:
        return int(x)
    return x


def numbers(values) -> list:
    return [number(v) for v in np.asarray(values, dtype=np.float64).ravel()]


def read_json(path) -> Any:
    """Parse a JSON file, mapping every failure to ParseError."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_json(text, str(path))


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def dumps(obj: dict) -> str:
    """Canonical text: one top-level key per line, compact values."""
    if not isinstance(obj, dict):
        return json.dumps(obj, separators=(", ", ": "))
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(', ', ': '))}" for k, v in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


def write_json(obj: dict, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


# field helpers


def _require(d: Any, key: str, path: str):
    if not isinstance(d, dict):
        raise SchemaError(f"{path}: expected an object")
    if key not in d:
        raise SchemaError(f"{path}.{key}: missing")
    return d[key]


def _int(v: Any, path: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(f"{path}: expected an integer, got {v!r}")
    return v


def _int_list(v: Any, path: str) -> list[int]:
    if not isinstance(v, list):
        raise SchemaError(f"{path}: expected an array of integers")
    return [_int(x, f"{path}[{i}]") for i, x in enumerate(v)]


def _num_list(v: Any, path: str) -> list[float]:
    if not isinstance(v, list):
        raise SchemaError(f"{path}: expected an array of numbers")
    out = []
    for i, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
            raise SchemaError(f"{path}[{i}]: expected a finite number, got {x!r}")
        out.append(float(x))
    return out


def _check_keys(d: dict, allowed: set, path: str) -> None:
    extra = sorted(set(d) - allowed)
    if extra:
        raise SchemaError(f"{path}: unknown key(s) {extra}")


def _scheme(row_cuts, col_cuts, rows, cols, path):
    try:
        scheme = PartitionScheme(tuple(row_cuts), tuple(col_cuts))
        validate_scheme(scheme, rows, cols)
    except SchemeError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    return scheme


# matrices

_MATRIX_KEYS = {"rows", "cols", "row_cuts", "col_cuts", "entries"}


def matrix_to_dict(m: SuperMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "row_cuts": list(m.row_cuts),
        "col_cuts": list(m.col_cuts),
        "entries": numbers(m.entries),
    }


def matrix_from_dict(d: Any, path: str = "$") -> SuperMatrix:
    """Build a SuperMatrix, raising SchemaError with a JSON path on bad input."""
    if not isinstance(d, dict):
        raise SchemaError(f"{path}: expected a matrix object")
    _check_keys(d, _MATRIX_KEYS, path)
    rows = _int(_require(d, "rows", path), f"{path}.rows")
    cols = _int(_require(d, "cols", path), f"{path}.cols")
    if rows < 1 or cols < 1:
        raise SchemaError(f"{path}: rows and cols must be positive, got {rows}x{cols}")
    rc = _int_list(_require(d, "row_cuts", path), f"{path}.row_cuts")
    cc = _int_list(_require(d, "col_cuts", path), f"{path}.col_cuts")
    entries = _num_list(_require(d, "entries", path), f"{path}.entries")
    if len(entries) != rows * cols:
        raise SchemaError(f"{path}.entries: has {len(entries)} values, expected rows*cols = {rows * cols}")
    scheme = _scheme(rc, cc, rows, cols, path)
    return SuperMatrix(np.array(entries).reshape(rows, cols), scheme)


def load_matrix(path) -> SuperMatrix:
    return matrix_from_dict(read_json(path))


def scheme_to_dict(s: PartitionScheme) -> dict:
    return s.to_dict()


# state vectors

_STATE_KEYS = {"domain", "scale", "cuts", "values"}


def state_to_dict(v: SuperStateVector) -> dict:
    out: dict = {"domain": v.domain.value}
    if v.scale is not None:
        out["scale"] = v.scale
    out["cuts"] = list(v.cuts)
    out["values"] = numbers(v.values)
    return out


def state_from_dict(d: Any, path: str = "$") -> SuperStateVector:
    if not isinstance(d, dict):
        raise SchemaError(f"{path}: expected a state vector object")
    _check_keys(d, _STATE_KEYS, path)
    dom = _require(d, "domain", path)
    try:
        domain = StateDomain(dom)
    except ValueError:
        raise SchemaError(f"{path}.domain: expected one of binary, bipolar, scaled, fuzzy; got {dom!r}") from None
    scale = d.get("scale")
    if scale is not None:
        scale = _int(scale, f"{path}.scale")
    cuts = _int_list(_require(d, "cuts", path), f"{path}.cuts")
    values = _num_list(_require(d, "values", path), f"{path}.values")
    if not values:
        raise SchemaError(f"{path}.values: empty")
    _scheme([], cuts, 1, len(values), f"{path}.cuts")
    try:
        return SuperStateVector(values, tuple(cuts), domain, scale)
    except SuperfuzzError as exc:
        raise SchemaError(f"{path}.values: {exc}") from None


def load_state(path) -> SuperStateVector:
    return state_from_dict(read_json(path))


# models

_MODEL_KEYS = {"kind", "variant", "matrix", "domain_labels", "range_labels", "scale", "thresholds_u", "thresholds_v"}


def model_to_dict(m: ModelSpec) -> dict:
    out: dict = {
        "kind": m.kind.value,
        "variant": m.variant.value,
        "matrix": matrix_to_dict(m.connection),
        "domain_labels": [list(g) for g in m.domain_labels],
        "range_labels": [list(g) for g in m.range_labels],
    }
    if m.scale is not None:
        out["scale"] = m.scale
    if m.thresholds_u is not None:
        out["thresholds_u"] = numbers(m.thresholds_u)
    if m.thresholds_v is not None:
        out["thresholds_v"] = numbers(m.thresholds_v)
    return out


def _labels(v: Any, path: str) -> list[list[str]]:
    if not isinstance(v, list):
        raise SchemaError(f"{path}: expected an array of label groups")
    out = []
    for i, g in enumerate(v):
        if not isinstance(g, list) or not all(isinstance(s, str) for s in g):
            raise SchemaError(f"{path}[{i}]: expected an array of strings")
        out.append(g)
    return out


def model_from_dict(d: Any, path: str = "$", validate: bool = True) -> ModelSpec:
    """Build a ModelSpec; with ``validate`` run :func:`validate_model` too.

    Raises
    ------
    SchemaError
        Layout problems, reported at the first offending path.
    ValidationError
        All invariant violations at once.
    """
    if not isinstance(d, dict):
        raise SchemaError(f"{path}: expected a model object")
    _check_keys(d, _MODEL_KEYS, path)
    kind = _require(d, "kind", path)
    variant = _require(d, "variant", path)
    try:
        kind = ModelKind(kind)
    except ValueError:
        raise SchemaError(f"{path}.kind: expected one of fcm, frm, bam, fam; got {kind!r}") from None
    try:
        variant = Variant(variant)
    except ValueError:
        raise SchemaError(
            f"{path}.variant: expected one of plain, super_row, super_column, super_diagonal, super_full; got {variant!r}"
        ) from None
    matrix = matrix_from_dict(_require(d, "matrix", path), f"{path}.matrix")
    dl = _labels(d.get("domain_labels", []), f"{path}.domain_labels")
    rl = _labels(d.get("range_labels", []), f"{path}.range_labels")
    scale = d.get("scale")
    if scale is not None:
        scale = _int(scale, f"{path}.scale")
    tu = d.get("thresholds_u")
    tv = d.get("thresholds_v")
    tu = None if tu is None else _num_list(tu, f"{path}.thresholds_u")
    tv = None if tv is None else _num_list(tv, f"{path}.thresholds_v")
    spec = ModelSpec(kind, variant, matrix, dl, rl, scale, tu, tv)
    if validate:
        issues = validate_model(spec)
        if issues:
            raise ValidationError(issues)
    return spec


def load_model(path, validate: bool = True) -> ModelSpec:
    """Read and validate a model file."""
    return model_from_dict(read_json(path), validate=validate)


def save_model(m: ModelSpec, path) -> None:
    write_json(model_to_dict(m), path)
