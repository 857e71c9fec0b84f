"""Ring files and report emission.

A ring file is UTF-8 JSON::

    {"prime": 2, "variables": ["x", "y", "z"], "quotient": ["x^3+y^3+z^3"]}

with an optional ``"name"``.  Reports are emitted as JSON, CSV or plain text
and are byte-stable: key order is fixed by the report dataclasses and no
timestamps are written.
"""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path
from typing import Any, Union

from .ideals import RingSpec

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingFileError(ValueError):
    pass


def ring_from_dict(data: dict) -> RingSpec:
    if not isinstance(data, dict):
        raise RingFileError("ring file must hold a JSON object")
    try:
        prime = data["prime"]
        variables = data["variables"]
    except KeyError as exc:
        raise RingFileError(f"ring file is missing {exc.args[0]!r}") from None
    quotient = data.get("quotient", [])
    if not isinstance(prime, int) or isinstance(prime, bool):
        raise RingFileError(f"prime must be an integer, got {prime!r}")
    if not isinstance(variables, list) or not variables:
        raise RingFileError("variables must be a non-empty list")
    for v in variables:
        if not isinstance(v, str) or not _IDENT.match(v):
            raise RingFileError(f"bad variable name {v!r}")
    if len(set(variables)) != len(variables):
        raise RingFileError("variable names must be unique")
    if not isinstance(quotient, list) or not all(isinstance(q, str) for q in quotient):
        raise RingFileError("quotient must be a list of polynomial strings")
    try:
        return RingSpec.create(prime, variables, quotient, name=data.get("name", ""))
    except ValueError as exc:
        raise RingFileError(str(exc)) from exc


def ring_to_dict(ring: RingSpec) -> dict:
    out = {
        "prime": ring.p,
        "variables": list(ring.variables),
        "quotient": [str(g) for g in ring.quotient.gens],
    }
    if ring.name:
        out["name"] = ring.name
    return out


def load_ring(path: Union[str, Path]) -> RingSpec:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RingFileError(f"{path}: {exc}") from None
    return ring_from_dict(data)


def dump_ring(ring: RingSpec) -> str:
    return json.dumps(ring_to_dict(ring), indent=2) + "\n"


# ---------------------------------------------------------------------------
# reports


def _as_dict(report: Any) -> Any:
    if hasattr(report, "to_dict"):
        return report.to_dict()
    return report


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def _csv(data: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "samples" in data:
        w.writerow(["sample_index", "sequence", "fte", "hsl0", "status"])
        for s in data["samples"]:
            w.writerow([s["sample_index"], ";".join(s["sequence"]),
                        _cell(s["fte"]), _cell(s["hsl0"]), s["status"]])
    elif "grid" in data:
        w.writerow(["exponents", "fte", "status", "filter_regular"])
        for g in data["grid"]:
            w.writerow([";".join(map(str, g["exponents"])), g["fte"], g["status"],
                        g["filter_regular"]])
    else:
        w.writerow(["key", "value"])
        for k, v in data.items():
            w.writerow([k, _cell(v)])
    return buf.getvalue()


def _text(data: dict) -> str:
    lines = []
    if "samples" in data:
        for s in data["samples"]:
            lines.append(
                f"[{s['sample_index']:3d}] ({'; '.join(s['sequence'])})  "
                f"fte={_cell(s['fte'])} hsl0={_cell(s['hsl0'])} {s['status']}"
            )
        skip = {"samples"}
    elif "grid" in data:
        for g in data["grid"]:
            ns = ",".join(map(str, g["exponents"]))
            lines.append(f"n=({ns})  fte={g['fte']} {g['status']}"
                         f"{'' if g['filter_regular'] else '  NOT filter regular'}")
        skip = {"grid"}
    else:
        skip = set()
    for k, v in data.items():
        if k not in skip:
            lines.append(f"{k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


def emit_report(report: Any, fmt: str = "json") -> bytes:
    """Serialize a report object (anything with ``to_dict``) or a plain dict."""
    data = _as_dict(report)
    if fmt == "json":
        return (json.dumps(data, indent=2) + "\n").encode("utf-8")
    if not isinstance(data, dict):
        data = {"result": data}
    if fmt == "csv":
        return _csv(data).encode("utf-8")
    if fmt == "text":
        return _text(data).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
