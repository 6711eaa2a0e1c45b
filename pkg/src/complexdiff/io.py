"""JSON interchange for bodies and measures.

Schemas (``kind`` selects one)::

    {"kind": "polygon2", "vertices": [[x, y], ...]}
    {"kind": "sampled2", "n": N, "h": [...]}
    {"kind": "measure1", "atoms": [[theta, w], ...]}
    {"kind": "polytope_cm", "m": 2, "vertices": [[x1, y1, x2, y2], ...]}
    {"kind": "ball_cm", "m": 2, "radius": r, "center": [...]}
    {"kind": "oracle_cm", "m": 2, "terms": [{"s": w, "theta": t, "base": <polytope_cm or ball_cm>}, ...]}
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .complexspace import BallCm, PolytopeCm, SupportOracleCm
from .errors import SchemaError
from .planar import AtomicMeasure1, Polygon2, SampledSupport2

KINDS = ("polygon2", "sampled2", "measure1", "polytope_cm", "ball_cm", "oracle_cm")


def _array(doc: dict, key: str, width: int | None = None) -> np.ndarray:
    if key not in doc:
        raise SchemaError(f"missing field {key!r}")
    try:
        a = np.asarray(doc[key], dtype=float)
    except (TypeError, ValueError) as exc:
        raise SchemaError(f"field {key!r} is not numeric") from exc
    if width is not None and (a.ndim != 2 or a.shape[1] != width or a.shape[0] == 0):
        raise SchemaError(f"field {key!r} must be a non-empty list of {width}-vectors")
    return a


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SchemaError(f"field {key!r} must be an integer")
    return v


def from_json(doc) -> object:
    """Build a body (or measure) from a parsed JSON document."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaError("expected an object with a 'kind' field")
    kind = doc["kind"]
    try:
        if kind == "polygon2":
            return Polygon2(_array(doc, "vertices", 2))
        if kind == "sampled2":
            h = _array(doc, "h")
            if "n" in doc and _int(doc, "n") != h.size:
                raise SchemaError("'n' does not match the number of samples")
            return SampledSupport2(h)
        if kind == "measure1":
            atoms = _array(doc, "atoms", 2)
            return AtomicMeasure1(atoms[:, 0], atoms[:, 1])
        if kind == "polytope_cm":
            m = _int(doc, "m")
            return PolytopeCm(m, _array(doc, "vertices", 2 * m))
        if kind == "ball_cm":
            m = _int(doc, "m")
            center = tuple(_array(doc, "center")) if "center" in doc else None
            return BallCm(m, float(doc.get("radius", 1.0)), center)
        if kind == "oracle_cm":
            m = _int(doc, "m")
            terms = doc.get("terms")
            if not isinstance(terms, list):
                raise SchemaError("'terms' must be a list")
            parsed = []
            for t in terms:
                if not isinstance(t, dict) or not {"s", "theta", "base"} <= t.keys():
                    raise SchemaError("each term needs 's', 'theta' and 'base'")
                base = from_json(t["base"])
                if not isinstance(base, (PolytopeCm, BallCm)):
                    raise SchemaError("term bases must be polytope_cm or ball_cm")
                parsed.append((float(t["s"]), float(t["theta"]), base))
            return SupportOracleCm(m, tuple(parsed))
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"invalid {kind}: {exc}") from exc
    raise SchemaError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def to_json(obj) -> dict:
    if isinstance(obj, Polygon2):
        return {"kind": "polygon2", "vertices": obj.vertices.tolist()}
    if isinstance(obj, SampledSupport2):
        return {"kind": "sampled2", "n": obj.n, "h": obj.h.tolist()}
    if isinstance(obj, AtomicMeasure1):
        return {"kind": "measure1", "atoms": [[float(a), float(w)] for a, w in obj.atoms]}
    if isinstance(obj, PolytopeCm):
        return {"kind": "polytope_cm", "m": obj.m, "vertices": obj.vertices.tolist()}
    if isinstance(obj, BallCm):
        return {"kind": "ball_cm", "m": obj.m, "radius": obj.radius, "center": obj.center_array().tolist()}
    if isinstance(obj, SupportOracleCm):
        return {
            "kind": "oracle_cm",
            "m": obj.m,
            "terms": [{"s": float(s), "theta": float(th), "base": to_json(b)} for s, th, b in obj.terms],
        }
    raise SchemaError(f"cannot serialize {type(obj).__name__}")


def load(path) -> object:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON ({exc.msg})") from exc
    return from_json(doc)


def dump(obj, path) -> None:
    Path(path).write_text(json.dumps(to_json(obj), indent=1))
