"""JSON wire forms for rationals, elements, carriers and reports."""

from __future__ import annotations

import json
from typing import Any

from .carriers import COORDINATE, Carrier, CoordinateVector, carrier_from_config
from .core import InputError, Q, Rational, format_rational
from .plfunction import INTERVAL, REAL_LINE, PLFunction
from .unitization import UnitizedElement


def to_wire(obj: Any) -> Any:
    """Recursively convert package values to JSON-ready data."""
    if isinstance(obj, Rational):
        return format_rational(obj)
    if isinstance(obj, PLFunction):
        return {
            "domain": obj.domain,
            "breakpoints": [format_rational(t) for t in obj.breakpoints],
            "values": [format_rational(v) for v in obj.values],
        }
    if isinstance(obj, CoordinateVector):
        return {"entries": [format_rational(v) for v in obj.entries]}
    if isinstance(obj, UnitizedElement):
        return {"x": to_wire(obj.x), "alpha": format_rational(obj.alpha)}
    if isinstance(obj, Carrier):
        return obj.config()
    if isinstance(obj, (list, tuple)):
        return [to_wire(v) for v in obj]
    if isinstance(obj, dict):
        return {k: to_wire(v) for k, v in obj.items()}
    return obj


def element_from_wire(data: Any):
    """Parse a carrier element (PL function or coordinate vector)."""
    if not isinstance(data, dict):
        raise InputError(f"malformed element {data!r}")
    try:
        if "entries" in data:
            return CoordinateVector(tuple(_rationals(data["entries"])))
        if "breakpoints" in data:
            domain = data.get("domain", INTERVAL)
            return PLFunction(tuple(_rationals(data["breakpoints"])), tuple(_rationals(data["values"])), domain)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed element: {exc}") from exc
    raise InputError("element needs 'entries' or 'breakpoints'")


def unitized_from_wire(data: Any) -> UnitizedElement:
    """Parse ``{"x": element, "alpha": "p/q"}``; a bare element means ``alpha = 0``."""
    if isinstance(data, dict) and "x" in data:
        return UnitizedElement(element_from_wire(data["x"]), _rational(data.get("alpha", "0")))
    return UnitizedElement(element_from_wire(data), 0)


def _rational(v) -> Rational:
    if isinstance(v, float):
        raise InputError(f"floats are not accepted: {v!r}; use \"p/q\"")
    return Q(v)


def _rationals(vs) -> list:
    if not isinstance(vs, list):
        raise InputError("expected a list of rationals")
    return [_rational(v) for v in vs]


def infer_carrier(element) -> Carrier:
    """Default carrier for an element read from a file."""
    if isinstance(element, CoordinateVector):
        n = len(element)
        return carrier_from_config({"kind": COORDINATE, "dim": n})
    if element.domain == REAL_LINE:
        return carrier_from_config("compact_support")
    return carrier_from_config("interval")


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(to_wire(obj), indent=2, sort_keys=False, ensure_ascii=False)
