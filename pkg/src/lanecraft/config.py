"""Scenario configuration: vehicles, lane geometry, and planner settings.

The coordinate frame is fixed at the ego vehicle's starting position: the
ego begins at longitudinal position 0 in lane 0 (the original lane), and
lane 1 is the target lane whose center sits one lane width to the left.
All other vehicles hold their lane and speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constraints import ConstraintLimits
from .trajectory import ManeuverParams, TrajectoryFamily

DEFAULT_VEHICLE_LENGTH = 5.0
DEFAULT_VEHICLE_WIDTH = 2.0


@dataclass(frozen=True)
class VehicleState:
    """A vehicle snapshot: lane index, longitudinal position, constant speed."""

    vehicle_id: str
    lane: int
    position: float
    speed: float
    length: float = DEFAULT_VEHICLE_LENGTH
    width: float = DEFAULT_VEHICLE_WIDTH

    def __post_init__(self) -> None:
        if self.speed < 0.0:
            raise ValueError(f"vehicle {self.vehicle_id}: speed must be >= 0")
        if self.length <= 0.0 or self.width <= 0.0:
            raise ValueError(f"vehicle {self.vehicle_id}: footprint must be positive")
        if self.lane not in (0, 1):
            raise ValueError(
                f"vehicle {self.vehicle_id}: lane must be 0 or 1, got {self.lane}"
            )


@dataclass(frozen=True)
class ScenarioConfig:
    """Full description of one two-lane lane-change scenario."""

    name: str
    ego: VehicleState
    others: tuple[VehicleState, ...] = ()
    lane_width: float = 3.6
    safety_distance: float = 3.0
    limits: ConstraintLimits = field(default_factory=ConstraintLimits)
    family: TrajectoryFamily = TrajectoryFamily.SEXTIC
    a6: float = 0.01
    duration_override: float | None = None
    target_speed: float | None = None
    dt: float = 0.01
    description: str = ""

    def __post_init__(self) -> None:
        if self.lane_width <= 0.0:
            raise ValueError(f"lane_width must be > 0, got {self.lane_width}")
        if self.safety_distance < 0.0:
            raise ValueError("safety_distance must be >= 0")
        if self.dt <= 0.0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if self.ego.lane != 0:
            raise ValueError("ego must start in lane 0")
        if self.ego.position != 0.0:
            raise ValueError("ego must start at position 0 (positions are ego-relative)")
        if self.duration_override is not None and self.duration_override <= 0.0:
            raise ValueError("duration_override must be > 0 when given")
        if self.target_speed is not None and self.target_speed < 0.0:
            raise ValueError("target_speed must be >= 0 when given")
        ids = [self.ego.vehicle_id] + [v.vehicle_id for v in self.others]
        if len(set(ids)) != len(ids):
            raise ValueError("vehicle ids must be unique")

    def lane_center(self, lane: int) -> float:
        return lane * self.lane_width

    def lead_vehicle(self) -> VehicleState | None:
        """Nearest vehicle ahead of the ego in the ego's own lane."""
        ahead = [v for v in self.others if v.lane == 0 and v.position > 0.0]
        return min(ahead, key=lambda v: v.position) if ahead else None

    def target_lane_lead(self) -> VehicleState | None:
        """Nearest target-lane vehicle at or ahead of the ego's position."""
        ahead = [v for v in self.others if v.lane == 1 and v.position >= 0.0]
        return min(ahead, key=lambda v: v.position) if ahead else None

    def target_lane_lag(self) -> VehicleState | None:
        """Nearest target-lane vehicle behind the ego's position."""
        behind = [v for v in self.others if v.lane == 1 and v.position < 0.0]
        return max(behind, key=lambda v: v.position) if behind else None

    def maneuver_params(self) -> ManeuverParams:
        """Trajectory parameters implied by this scenario.

        Without a lead vehicle the relative distance is unbounded and a
        duration override is required to build a plan.
        """
        lead = self.lead_vehicle()
        return ManeuverParams(
            initial_speed=self.ego.speed,
            target_speed=self.target_speed if self.target_speed is not None else self.ego.speed,
            lead_speed=lead.speed if lead is not None else 0.0,
            lead_distance=lead.position if lead is not None else math.inf,
            safety_distance=self.safety_distance,
            lane_width=self.lane_width,
            a6=self.a6,
            duration=self.duration_override,
        )
