"""JSON encodings for instances and certificates.

Rationals are always strings ``"num/den"`` with ``den >= 1`` (integers are
written ``"n/1"``); floats are never accepted.

Instance file::

    {"dim": 2, "points": [["0/1", "0/1"], ["1/1", "0/1"], ...], "meta": {...}}

Certificate::

    {"partition": [[1, 4], [2, 3]], "witness": ["1/2", "1/2"],
     "coeffs_I": ["1/2", "1/2"], "coeffs_J": ["1/2", "1/2"]}
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from typing import Any

from .certificate import Partition, RadonCertificate
from .errors import InvalidInputError
from .geometry import PointSet

RATIONAL_RE = re.compile(r"-?[0-9]+/[1-9][0-9]*")


def pretty_json(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with keys sorted and every list of scalars kept on one line."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{inner}{json.dumps(k)}: {pretty_json(v, indent, _level + 1)}"
            for k, v in sorted(obj.items())
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        items = [f"{inner}{pretty_json(v, indent, _level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return json.dumps(obj)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: Any) -> Fraction:
    if not isinstance(s, str) or not RATIONAL_RE.fullmatch(s):
        raise InvalidInputError(f"not a rational string of the form num/den: {s!r}")
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def instance_to_dict(ps: PointSet, meta: dict | None = None) -> dict:
    out: dict[str, Any] = {
        "dim": ps.dim,
        "points": [[format_rational(c) for c in p] for p in ps.points],
    }
    if meta:
        out["meta"] = meta
    return out


def dumps_instance(ps: PointSet, meta: dict | None = None) -> str:
    return pretty_json(instance_to_dict(ps, meta)) + "\n"


def instance_from_dict(obj: Any) -> tuple[PointSet, dict]:
    if not isinstance(obj, dict):
        raise InvalidInputError("instance must be a JSON object")
    unknown = set(obj) - {"dim", "points", "meta"}
    if unknown:
        raise InvalidInputError(f"unknown instance fields: {sorted(unknown)}")
    dim = obj.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InvalidInputError(f"dim must be a positive integer, got {dim!r}")
    points = obj.get("points")
    if not isinstance(points, list) or not all(isinstance(p, list) for p in points):
        raise InvalidInputError("points must be a list of coordinate lists")
    meta = obj.get("meta", {})
    if not isinstance(meta, dict):
        raise InvalidInputError("meta must be an object")
    ps = PointSet([[parse_rational(c) for c in p] for p in points], dim=dim)
    return ps, meta


def loads_instance(text: str) -> tuple[PointSet, dict]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"invalid JSON: {exc}") from exc
    return instance_from_dict(obj)


def instance_digest(ps: PointSet) -> str:
    return hashlib.sha256(dumps_instance(ps).encode()).hexdigest()


def certificate_to_dict(cert: RadonCertificate) -> dict:
    return {
        "partition": cert.partition.as_lists(),
        "witness": [format_rational(c) for c in cert.witness],
        "coeffs_I": [format_rational(c) for c in cert.coeffs_I],
        "coeffs_J": [format_rational(c) for c in cert.coeffs_J],
    }


def certificate_from_dict(obj: dict) -> RadonCertificate:
    side_I, side_J = obj["partition"]
    return RadonCertificate(
        Partition(tuple(side_I), tuple(side_J)),
        tuple(parse_rational(c) for c in obj["witness"]),
        tuple(parse_rational(c) for c in obj["coeffs_I"]),
        tuple(parse_rational(c) for c in obj["coeffs_J"]),
    )
