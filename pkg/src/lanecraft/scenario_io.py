"""Scenario file loading: YAML documents validated against a strict schema.

Unknown keys are rejected. All units are SI (m, m/s, s); speed fields may
instead be strings with an explicit km/h suffix, converted exactly by
dividing by 3.6. The published copy of the schema lives in
``schema/scenario.schema.json`` at the repository root.
"""

from __future__ import annotations

import re
from pathlib import Path

import jsonschema
import yaml

from .config import ScenarioConfig, VehicleState
from .constraints import ConstraintLimits
from .trajectory import TrajectoryFamily

KMH_PATTERN = r"^[0-9]+(\.[0-9]+)?\s*km/h$"
_KMH_RE = re.compile(r"([0-9]+(?:\.[0-9]+)?)\s*km/h")

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "lanecraft scenario",
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "ego", "lane_width", "safety_distance", "family"],
    "properties": {
        "name": {"type": "string", "minLength": 1},
        "description": {"type": "string"},
        "ego": {"$ref": "#/$defs/vehicle"},
        "others": {"type": "array", "items": {"$ref": "#/$defs/vehicle"}},
        "lane_width": {"type": "number", "exclusiveMinimum": 0},
        "safety_distance": {"type": "number", "minimum": 0},
        "limits": {"$ref": "#/$defs/limits"},
        "family": {"enum": ["quartic", "quintic", "sextic", "septic"]},
        "a6": {"type": "number"},
        "duration_override": {"type": "number", "exclusiveMinimum": 0},
        "target_speed": {"$ref": "#/$defs/speed"},
        "dt": {"type": "number", "exclusiveMinimum": 0},
    },
    "$defs": {
        "speed": {
            "oneOf": [
                {"type": "number", "minimum": 0},
                {"type": "string", "pattern": KMH_PATTERN},
            ]
        },
        "vehicle": {
            "type": "object",
            "additionalProperties": False,
            "required": ["id", "lane", "position", "speed"],
            "properties": {
                "id": {"type": "string", "minLength": 1},
                "lane": {"enum": [0, 1]},
                "position": {"type": "number"},
                "speed": {"$ref": "#/$defs/speed"},
                "length": {"type": "number", "exclusiveMinimum": 0},
                "width": {"type": "number", "exclusiveMinimum": 0},
            },
        },
        "limits": {
            "type": "object",
            "additionalProperties": False,
            "properties": {
                "accel_max": {"type": "number", "exclusiveMinimum": 0},
                "accel_min": {"type": "number", "exclusiveMaximum": 0},
                "require_forward": {"type": "boolean"},
            },
        },
    },
}


class ScenarioError(Exception):
    """A scenario file failed to parse or validate."""


def parse_speed(value) -> float:
    """Accept a number in m/s or a string like ``"100 km/h"``."""
    if isinstance(value, (int, float)):
        return float(value)
    match = _KMH_RE.fullmatch(value)
    if match is None:
        raise ScenarioError(f"cannot parse speed {value!r}; use m/s or 'NN km/h'")
    return float(match.group(1)) / 3.6


def load_scenario(path: str | Path) -> ScenarioConfig:
    """Parse, validate, and convert one scenario file."""
    path = Path(path)
    try:
        raw = yaml.safe_load(path.read_text())
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"{path}:{mark.line + 1}" if mark is not None else str(path)
        raise ScenarioError(f"{where}: YAML parse error: {exc}") from exc
    if not isinstance(raw, dict):
        raise ScenarioError(f"{path}: scenario must be a mapping")

    validator = jsonschema.Draft202012Validator(SCENARIO_SCHEMA)
    errors = sorted(validator.iter_errors(raw), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        location = ".".join(str(part) for part in err.absolute_path) or "(top level)"
        raise ScenarioError(f"{path}: at {location}: {err.message}")

    try:
        return _to_config(raw)
    except (ValueError, ScenarioError) as exc:
        raise ScenarioError(f"{path}: {exc}") from exc


def _to_vehicle(entry: dict) -> VehicleState:
    return VehicleState(
        vehicle_id=entry["id"],
        lane=entry["lane"],
        position=float(entry["position"]),
        speed=parse_speed(entry["speed"]),
        length=float(entry.get("length", 5.0)),
        width=float(entry.get("width", 2.0)),
    )


def _to_config(raw: dict) -> ScenarioConfig:
    limits_raw = raw.get("limits", {})
    limits = ConstraintLimits(
        accel_max=float(limits_raw.get("accel_max", 2.0)),
        accel_min=float(limits_raw.get("accel_min", -3.0)),
        require_forward=bool(limits_raw.get("require_forward", True)),
    )
    target_speed = raw.get("target_speed")
    return ScenarioConfig(
        name=raw["name"],
        description=raw.get("description", ""),
        ego=_to_vehicle(raw["ego"]),
        others=tuple(_to_vehicle(v) for v in raw.get("others", [])),
        lane_width=float(raw["lane_width"]),
        safety_distance=float(raw["safety_distance"]),
        limits=limits,
        family=TrajectoryFamily(raw["family"]),
        a6=float(raw.get("a6", 0.01)),
        duration_override=(
            float(raw["duration_override"]) if "duration_override" in raw else None
        ),
        target_speed=parse_speed(target_speed) if target_speed is not None else None,
        dt=float(raw.get("dt", 0.01)),
    )
