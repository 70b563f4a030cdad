"""JSON file formats for spaces and functions.

Space file, either form::

    {"n": 2, "min_nbrs": [[0], [0, 1]]}
    {"n": 2, "opens": [[], [0], [0, 1]]}

Function file::

    {"values": ["0", "1/2", "1"]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import FinsertError, MalformedTopology
from .realfn import FiniteFunction
from .topology import Topology


class FormatError(FinsertError, ValueError):
    pass


def _point_lists(raw: Any, n: int, key: str) -> list[list[int]]:
    if not isinstance(raw, list):
        raise FormatError(f"{key!r} must be a list of point lists")
    out = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in row):
            raise FormatError(f"{key}[{i}] must be a list of integer points")
        for p in row:
            if not 0 <= p < n:
                raise FormatError(f"{key}[{i}] mentions point {p} outside 0..{n - 1}")
        out.append(row)
    return out


def space_from_dict(data: Any) -> Topology:
    if not isinstance(data, dict):
        raise FormatError("space file must hold a JSON object")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError("space file needs a non-negative integer 'n'")
    has_nbrs, has_opens = "min_nbrs" in data, "opens" in data
    if has_nbrs == has_opens:
        raise FormatError("space file needs exactly one of 'min_nbrs' or 'opens'")
    if has_nbrs:
        return Topology(n, _point_lists(data["min_nbrs"], n, "min_nbrs"))
    return Topology.from_opens(n, _point_lists(data["opens"], n, "opens"))


def space_to_dict(t: Topology, form: str = "min_nbrs") -> dict:
    if form == "min_nbrs":
        return {"n": t.n, "min_nbrs": [s.points() for s in t.min_nbr]}
    if form == "opens":
        return {"n": t.n, "opens": [s.points() for s in t.opens]}
    raise ValueError(f"unknown space form {form!r}")


def function_from_dict(data: Any) -> FiniteFunction:
    if not isinstance(data, dict) or "values" not in data:
        raise FormatError("function file must be an object with a 'values' list")
    raw = data["values"]
    if not isinstance(raw, list):
        raise FormatError("'values' must be a list")
    for i, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise FormatError(f"values[{i}] must be an integer or a 'p/q' string")
    try:
        return FiniteFunction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"values are not all exact rationals: {exc}") from exc


def function_to_dict(f: FiniteFunction) -> dict:
    return {"values": [str(v) for v in f.values]}


def dumps(data: dict) -> str:
    return json.dumps(data, sort_keys=True)


def _load(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def load_space(path) -> Topology:
    try:
        return space_from_dict(_load(path))
    except MalformedTopology as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_function(path) -> FiniteFunction:
    return function_from_dict(_load(path))


def save_space(t: Topology, path, form: str = "min_nbrs") -> None:
    Path(path).write_text(dumps(space_to_dict(t, form)) + "\n")


def save_function(f: FiniteFunction, path) -> None:
    Path(path).write_text(dumps(function_to_dict(f)) + "\n")
