"""Body JSON schema and report formatting (JSON / CSV)."""

import csv
import io
import json

from .errors import UsageError
from .geometry_core import (
    Ball,
    BallIntersection,
    Negate,
    Project3to2,
    Rotate2D,
    Scale,
    Sum,
)


def body_to_dict(body):
    if isinstance(body, BallIntersection):
        return {
            "dim": body.dim,
            "kind": "ball_intersection",
            "balls": [
                {"center": [float(x) for x in b.center], "radius": float(b.radius)}
                for b in body.balls
            ],
        }
    if isinstance(body, Scale):
        return {"kind": "scale", "t": body.t, "body": body_to_dict(body.inner)}
    if isinstance(body, Negate):
        return {"kind": "negate", "body": body_to_dict(body.inner)}
    if isinstance(body, Sum):
        return {"kind": "sum", "a": body_to_dict(body.left), "b": body_to_dict(body.right)}
    if isinstance(body, Rotate2D):
        return {"kind": "rotate", "alpha": body.alpha, "body": body_to_dict(body.inner)}
    if isinstance(body, Project3to2):
        return {"kind": "project", "body": body_to_dict(body.inner)}
    raise TypeError(f"cannot serialize {type(body).__name__}")


def _field(d, key):
    try:
        return d[key]
    except (KeyError, TypeError):
        raise UsageError(f"body JSON is missing field {key!r}") from None


def body_from_dict(d):
    kind = _field(d, "kind")
    try:
        if kind == "ball_intersection":
            balls = tuple(Ball(tuple(_field(b, "center")), _field(b, "radius"))
                          for b in _field(d, "balls"))
            return BallIntersection(int(_field(d, "dim")), balls)
        if kind == "scale":
            return Scale(float(_field(d, "t")), body_from_dict(_field(d, "body")))
        if kind == "negate":
            return Negate(body_from_dict(_field(d, "body")))
        if kind == "sum":
            return Sum(body_from_dict(_field(d, "a")), body_from_dict(_field(d, "b")))
        if kind == "rotate":
            return Rotate2D(float(_field(d, "alpha")), body_from_dict(_field(d, "body")))
        if kind == "project":
            return Project3to2(body_from_dict(_field(d, "body")))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"malformed {kind!r} node: {exc}") from None
    raise UsageError(f"unknown body kind {kind!r}")


def dumps_body(body):
    return json.dumps(body_to_dict(body))


def loads_body(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    return body_from_dict(data)


def load_body(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return loads_body(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def save_body(body, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_body(body) + "\n")


def flatten(obj, prefix=""):
    """Flatten nested dicts/lists into dotted keys, preserving order."""
    if isinstance(obj, dict):
        items = []
        for k, v in obj.items():
            items.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return items
    if isinstance(obj, (list, tuple)):
        items = []
        for i, v in enumerate(obj):
            items.extend(flatten(v, f"{prefix}.{i}" if prefix else str(i)))
        return items
    return [(prefix, obj)]


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else str(v)


def format_report(report, fmt="json"):
    """Serialize a report dict as one JSON object or a two-line CSV table."""
    if fmt == "json":
        return json.dumps(report)
    if fmt == "csv":
        pairs = flatten(report)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([k for k, _ in pairs])
        writer.writerow([_csv_value(v) for _, v in pairs])
        return buf.getvalue().rstrip("\n")
    raise UsageError(f"unknown report format {fmt!r}")
