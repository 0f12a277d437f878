"""Time-stepped playback of a planned maneuver against constant-speed traffic.

The ego follows its trajectory plan while every other vehicle coasts along
its lane center. At each sample the gap between the ego's safety zone (its
footprint inflated by the safety distance on all sides) and each vehicle's
footprint is recorded as that vehicle's separation; a negative separation
means the safety zone is penetrated. The collision verdict is stricter: it
fires only when the bare footprints themselves overlap, so ordinary traffic
passing abeam in the adjacent lane erodes the safety margin without being
scored as a crash. Footprints are axis-aligned rectangles: the heading
change during a highway lane change is a few degrees at most, so the
small-angle approximation holds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .behavior import (
    Action,
    GapPolicy,
    GateCode,
    ManeuverDecision,
    compute_factors,
    decide,
)
from .config import ScenarioConfig
from .constraints import ConstraintReport, check
from .poly import Polynomial
from .trajectory import (
    InfeasibleManeuver,
    TrajectoryPlan,
    TrajectorySample,
    build_plan,
    sample,
)

# Playback horizon when the planner keeps the lane and nothing pins a duration.
DEFAULT_KEEP_LANE_HORIZON = 5.0


@dataclass(frozen=True)
class RectFootprint:
    """Axis-aligned rectangle: center plus full length (x) and width (y)."""

    center_x: float
    center_y: float
    length: float
    width: float

    def inflated(self, margin: float) -> "RectFootprint":
        return RectFootprint(
            self.center_x, self.center_y, self.length + 2.0 * margin, self.width + 2.0 * margin
        )


def separation(ego_rect: RectFootprint, other_rect: RectFootprint) -> float:
    """Euclidean gap between two rectangles; negative means penetration.

    When the rectangles overlap on both axes the result is the (negative)
    depth along the axis needing the smallest translation to separate them.
    """
    gap_x = abs(ego_rect.center_x - other_rect.center_x) - (
        ego_rect.length + other_rect.length
    ) / 2.0
    gap_y = abs(ego_rect.center_y - other_rect.center_y) - (
        ego_rect.width + other_rect.width
    ) / 2.0
    if gap_x > 0.0 or gap_y > 0.0:
        return math.hypot(max(gap_x, 0.0), max(gap_y, 0.0))
    return max(gap_x, gap_y)


@dataclass(frozen=True)
class SimStep:
    """Ego pose/derivatives plus the safety-zone gap to each other vehicle."""

    ego: TrajectorySample
    separations: tuple[float, ...]  # ordered like ScenarioConfig.others


@dataclass(frozen=True)
class SimResult:
    steps: tuple[SimStep, ...]
    min_separation: float
    min_separation_time: float
    min_separation_vehicle: str | None
    collision: bool
    constraint_report: ConstraintReport
    decision: ManeuverDecision
    plan: TrajectoryPlan


def run(config: ScenarioConfig, force_maneuver: bool = False) -> SimResult:
    """Consult the planner, play the resulting motion back, and score it.

    A keep-lane decision still produces a playback (constant-speed cruise in
    the original lane) so collision verdicts and separations are always
    available. An infeasibility abort raises :class:`InfeasibleManeuver`.
    With ``force_maneuver`` the gates are bypassed and the lane change is
    executed regardless of the planner's verdict.
    """
    factors = compute_factors(config)
    policy = GapPolicy(
        min_gap=config.ego.length + 2.0 * config.safety_distance,
        safety_distance=config.safety_distance,
    )
    decision = decide(factors, policy, config.family)
    if force_maneuver:
        decision = ManeuverDecision(
            Action.INITIATE_LANE_CHANGE, GateCode.FORCED, factors, config.family
        )

    if decision.action is Action.ABORT_INFEASIBLE:
        raise InfeasibleManeuver(
            "behavior planner aborted: no feasible maneuver duration and no override"
        )
    if decision.action is Action.INITIATE_LANE_CHANGE:
        plan = build_plan(config.maneuver_params(), config.family)
    else:
        plan = _keep_lane_plan(config, factors.est_maneuver_time)

    ego_samples = sample(plan, config.dt)
    steps = []
    min_sep = math.inf
    min_time = 0.0
    min_vehicle: str | None = None
    collision = False
    for s in ego_samples:
        ego_rect = RectFootprint(s.x, s.y, config.ego.length, config.ego.width)
        safety_zone = ego_rect.inflated(config.safety_distance)
        seps = []
        for vehicle in config.others:
            rect = RectFootprint(
                vehicle.position + vehicle.speed * s.time,
                config.lane_center(vehicle.lane),
                vehicle.length,
                vehicle.width,
            )
            gap = separation(safety_zone, rect)
            seps.append(gap)
            if gap < min_sep:
                min_sep = gap
                min_time = s.time
                min_vehicle = vehicle.vehicle_id
            if separation(ego_rect, rect) < 0.0:
                collision = True
        steps.append(SimStep(ego=s, separations=tuple(seps)))

    report = check(plan, config.limits, config.dt)
    return SimResult(
        steps=tuple(steps),
        min_separation=min_sep,
        min_separation_time=min_time,
        min_separation_vehicle=min_vehicle,
        collision=collision,
        constraint_report=report,
        decision=decision,
        plan=plan,
    )


def _keep_lane_plan(config: ScenarioConfig, est_time: float | None) -> TrajectoryPlan:
    if config.duration_override is not None:
        horizon = config.duration_override
    elif est_time is not None:
        horizon = est_time
    else:
        horizon = DEFAULT_KEEP_LANE_HORIZON
    return TrajectoryPlan(
        longitudinal=Polynomial((0.0, config.ego.speed)),
        lateral=Polynomial((0.0,)),
        duration=horizon,
        family=config.family,
        warnings=("keep-lane playback: no lane change executed",),
    )
