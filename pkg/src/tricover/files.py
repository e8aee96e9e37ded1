"""Scenario and report files: canonical JSON with stable hashing.

Serialization is canonical so identical inputs produce byte-identical
files: keys sorted, two-space indentation, floats quantized to nine
significant digits, trailing newline. ``parse -> serialize`` is the
identity on canonical files, and the scenario hash is the SHA-256 of the
canonical bytes of the parsed scenario (formatting-insensitive).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from math import isfinite
from pathlib import Path
from typing import Any

from .errors import InvalidInputError
from .field import MobileSensor, Sensor, SensorField
from .geometry import Point

SCHEMA_VERSION = 1

# Every float in a file is quantized to this many significant digits.
_FLOAT_DIGITS = 9


def round_sig(value: float) -> float:
    """Quantize to nine significant digits (the file precision)."""
    v = float(value)
    if not isfinite(v):
        raise InvalidInputError(f"non-finite value cannot be serialized: {v!r}")
    return float(f"{v:.{_FLOAT_DIGITS}g}")


def _canonize(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {str(k): _canonize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_canonize(v) for v in obj]
    try:
        return round_sig(float(obj))  # numpy scalars
    except (TypeError, ValueError):
        raise InvalidInputError(f"unserializable value: {obj!r}")


def canonical_json_bytes(obj: Any) -> bytes:
    """Canonical serialized form of a JSON-able object."""
    return (
        json.dumps(_canonize(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"
    ).encode("utf-8")


def _parse_json(text: bytes | str, what: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidInputError(f"{what} must be a JSON object")
    return doc


def _check_schema_version(doc: dict, what: str) -> None:
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise InvalidInputError(
            f"{what} has unsupported schema_version {version!r} "
            f"(expected {SCHEMA_VERSION})"
        )


def _get(doc: dict, key: str, what: str) -> Any:
    if key not in doc:
        raise InvalidInputError(f"{what} is missing required key {key!r}")
    return doc[key]


# --- scenarios ---------------------------------------------------------------


@dataclass(frozen=True)
class ScenarioDoc:
    """A sensor field plus generator metadata, as stored on disk."""

    field: SensorField
    meta: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        f = self.field
        return {
            "schema_version": SCHEMA_VERSION,
            "field": {
                "width": f.width,
                "height": f.height,
                "sensing_radius": f.sensing_radius,
                "stationary": [
                    {"id": s.id, "x": s.position.x, "y": s.position.y}
                    for s in f.stationary
                ],
                "mobile": [
                    {
                        "id": m.id,
                        "x": m.position.x,
                        "y": m.position.y,
                        "sensing_radius": m.radius,
                    }
                    for m in f.mobile
                ],
            },
            "meta": self.meta,
        }

    def hash(self) -> str:
        return hashlib.sha256(canonical_json_bytes(self.to_dict())).hexdigest()


def scenario_from_dict(doc: dict) -> ScenarioDoc:
    _check_schema_version(doc, "scenario")
    fd = _get(doc, "field", "scenario")
    if not isinstance(fd, dict):
        raise InvalidInputError("scenario 'field' must be an object")
    try:
        stationary = tuple(
            Sensor(int(s["id"]), Point(float(s["x"]), float(s["y"])))
            for s in _get(fd, "stationary", "scenario field")
        )
        mobile = tuple(
            MobileSensor(
                int(m["id"]),
                Point(float(m["x"]), float(m["y"])),
                float(m["sensing_radius"]),
            )
            for m in fd.get("mobile", [])
        )
        sensor_field = SensorField(
            width=float(_get(fd, "width", "scenario field")),
            height=float(_get(fd, "height", "scenario field")),
            sensing_radius=float(_get(fd, "sensing_radius", "scenario field")),
            stationary=stationary,
            mobile=mobile,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed scenario field: {exc}") from exc
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise InvalidInputError("scenario 'meta' must be an object")
    return ScenarioDoc(field=sensor_field, meta=meta)


def load_scenario(path: str | Path) -> ScenarioDoc:
    return scenario_from_dict(_parse_json(Path(path).read_bytes(), f"scenario {path}"))


def save_scenario(doc: ScenarioDoc, path: str | Path) -> None:
    Path(path).write_bytes(canonical_json_bytes(doc.to_dict()))


# --- reports -----------------------------------------------------------------


@dataclass(frozen=True)
class ReportDoc:
    """Detection / planning / verification results for one scenario.

    Sections not produced yet are ``None``; ``meta`` records the options
    and conventions used (e.g. the vertex-sector sum model).
    """

    scenario_hash: str
    mesh: dict | None = None
    triangles: list | None = None
    plan: dict | None = None
    verify: dict | None = None
    meta: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "scenario_hash": self.scenario_hash,
            "mesh": self.mesh,
            "triangles": self.triangles,
            "plan": self.plan,
            "verify": self.verify,
            "meta": self.meta,
        }


def report_from_dict(doc: dict) -> ReportDoc:
    _check_schema_version(doc, "report")
    scenario_hash = _get(doc, "scenario_hash", "report")
    if not isinstance(scenario_hash, str):
        raise InvalidInputError("report 'scenario_hash' must be a string")
    report = ReportDoc(
        scenario_hash=scenario_hash,
        mesh=doc.get("mesh"),
        triangles=doc.get("triangles"),
        plan=doc.get("plan"),
        verify=doc.get("verify"),
        meta=doc.get("meta", {}) or {},
    )
    _validate_report(report)
    return report


def _validate_report(report: ReportDoc) -> None:
    cell_ids: set[int] = set()
    if report.triangles is not None:
        if not isinstance(report.triangles, list):
            raise InvalidInputError("report 'triangles' must be a list")
        for entry in report.triangles:
            for key in ("id", "vertices", "case", "s_h", "method", "is_hole"):
                if key not in entry:
                    raise InvalidInputError(
                        f"report triangle entry is missing key {key!r}"
                    )
            if entry["s_h"] < 0:
                raise InvalidInputError(
                    f"report triangle {entry['id']} has negative hole area"
                )
            cell_ids.add(entry["id"])
    if report.plan is not None:
        for key in ("assignments", "total_movement", "unserved"):
            if key not in report.plan:
                raise InvalidInputError(f"report plan is missing key {key!r}")
        referenced = [a["cell_id"] for a in report.plan["assignments"]]
        referenced.extend(report.plan["unserved"])
        for cid in referenced:
            if report.triangles is not None and cid not in cell_ids:
                raise InvalidInputError(
                    f"plan references unknown cell id {cid}"
                )


def load_report(path: str | Path) -> ReportDoc:
    return report_from_dict(_parse_json(Path(path).read_bytes(), f"report {path}"))


def save_report(doc: ReportDoc, path: str | Path) -> None:
    Path(path).write_bytes(canonical_json_bytes(doc.to_dict()))
