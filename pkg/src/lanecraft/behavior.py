"""Lane-change decision logic: gap acceptance gates over vehicle snapshots.

The planner evaluates four gates in order and stops at the first failure:

1. feasibility   - a usable maneuver duration exists (closing-speed formula
                   or an explicit override); otherwise the maneuver aborts
2. insertion gap - the bumper-to-bumper gap between the target-lane lead and
                   lag vehicles admits the ego plus its safety margins
3. projection    - under constant-velocity projection of every vehicle, the
                   ego keeps at least the safety distance to the target-lane
                   lead and lag at 0.1 s checkpoints over the whole maneuver
4. lead clearance- the projected distance to the current-lane lead still
                   exceeds the safety distance when the maneuver completes

The gate ordering is a documented reconstruction of the decision flow (gap
existence first among the vehicle gates, per the factor ordering); vehicles
are assumed to hold lane and speed throughout. Decisions are pure functions
of the factor snapshot: identical inputs give identical outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .config import ScenarioConfig
from .trajectory import (
    InfeasibleManeuver,
    TrajectoryFamily,
    maneuver_distance,
    maneuver_duration,
    time_grid,
)


class Action(Enum):
    KEEP_LANE = "keep_lane"
    INITIATE_LANE_CHANGE = "initiate_lane_change"
    ABORT_INFEASIBLE = "abort_infeasible"


class GateCode(Enum):
    """Which gate settled the decision."""

    ALL_GATES_PASSED = "all_gates_passed"
    INFEASIBLE_DURATION = "infeasible_duration"
    GAP_TOO_SMALL = "gap_too_small"
    TARGET_LANE_CONFLICT = "target_lane_conflict"
    LEAD_CLEARANCE = "lead_clearance"
    FORCED = "forced"


@dataclass(frozen=True)
class GapPolicy:
    """Thresholds for the decision gates.

    ``min_gap`` defaults to one vehicle length plus a safety distance on
    either side: the smallest slot the ego could geometrically occupy.
    """

    min_gap: float = 11.0
    safety_distance: float = 3.0
    checkpoint_dt: float = 0.1


@dataclass(frozen=True)
class DecisionFactors:
    """Snapshot of the quantities the gates read.

    Distances to absent vehicles are unbounded (+inf) so their gates pass
    vacuously; speeds of absent vehicles are None. ``dist_to_lead_current``
    is center-to-center (it doubles as the relative distance in the duration
    formula) while the target-lane distances are bumper-to-bumper gaps.
    """

    gap_target_lane: float
    v_target_lead: float | None
    v_target_lag: float | None
    v_ego: float
    dist_to_lead_current: float
    est_maneuver_time: float | None
    est_maneuver_distance: float | None
    dist_to_target_lead: float = math.inf
    dist_to_target_lag: float = math.inf
    v_lead_current: float | None = None
    time_overridden: bool = False


@dataclass(frozen=True)
class ManeuverDecision:
    action: Action
    reason: GateCode
    factors: DecisionFactors
    plan_family: TrajectoryFamily | None = None


def compute_factors(config: ScenarioConfig) -> DecisionFactors:
    """Derive the decision factors from the current vehicle states."""
    ego = config.ego
    lead = config.lead_vehicle()
    tl_lead = config.target_lane_lead()
    tl_lag = config.target_lane_lag()

    if tl_lead is not None and tl_lag is not None:
        gap = (tl_lead.position - tl_lag.position) - (tl_lead.length + tl_lag.length) / 2.0
    else:
        gap = math.inf
    dist_front = (
        tl_lead.position - (tl_lead.length + ego.length) / 2.0
        if tl_lead is not None
        else math.inf
    )
    dist_rear = (
        -tl_lag.position - (tl_lag.length + ego.length) / 2.0
        if tl_lag is not None
        else math.inf
    )

    params = config.maneuver_params()
    overridden = config.duration_override is not None
    if overridden:
        est_time: float | None = config.duration_override
    elif lead is None:
        est_time = None
    else:
        try:
            est_time = maneuver_duration(params)
        except InfeasibleManeuver:
            est_time = None
        if est_time is not None and not 0.0 < est_time < math.inf:
            est_time = None
    est_distance = None
    if est_time is not None:
        est_distance = maneuver_distance(replace(params, duration=est_time))

    return DecisionFactors(
        gap_target_lane=gap,
        v_target_lead=tl_lead.speed if tl_lead is not None else None,
        v_target_lag=tl_lag.speed if tl_lag is not None else None,
        v_ego=ego.speed,
        dist_to_lead_current=lead.position if lead is not None else math.inf,
        est_maneuver_time=est_time,
        est_maneuver_distance=est_distance,
        dist_to_target_lead=dist_front,
        dist_to_target_lag=dist_rear,
        v_lead_current=lead.speed if lead is not None else None,
        time_overridden=overridden,
    )


def decide(
    factors: DecisionFactors,
    policy: GapPolicy,
    family: TrajectoryFamily | None = None,
) -> ManeuverDecision:
    """Run the gates in order and return the first failure or an initiation."""
    horizon = factors.est_maneuver_time
    if horizon is None:
        return ManeuverDecision(
            Action.ABORT_INFEASIBLE, GateCode.INFEASIBLE_DURATION, factors
        )

    if factors.gap_target_lane < policy.min_gap:
        return ManeuverDecision(Action.KEEP_LANE, GateCode.GAP_TOO_SMALL, factors)

    for t in time_grid(horizon, policy.checkpoint_dt):
        front = projected_target_gap(
            factors.dist_to_target_lead, factors.v_target_lead, factors.v_ego, t, ahead=True
        )
        rear = projected_target_gap(
            factors.dist_to_target_lag, factors.v_target_lag, factors.v_ego, t, ahead=False
        )
        if front < policy.safety_distance or rear < policy.safety_distance:
            return ManeuverDecision(
                Action.KEEP_LANE, GateCode.TARGET_LANE_CONFLICT, factors
            )

    if math.isfinite(factors.dist_to_lead_current):
        assert factors.v_lead_current is not None
        end_distance = factors.dist_to_lead_current + (
            factors.v_lead_current - factors.v_ego
        ) * horizon
        if end_distance <= policy.safety_distance:
            return ManeuverDecision(Action.KEEP_LANE, GateCode.LEAD_CLEARANCE, factors)

    return ManeuverDecision(
        Action.INITIATE_LANE_CHANGE, GateCode.ALL_GATES_PASSED, factors, family
    )


def projected_target_gap(
    initial_gap: float, other_speed: float | None, ego_speed: float, t: float, ahead: bool
) -> float:
    """Bumper gap to a target-lane vehicle after ``t`` seconds of coasting."""
    if not math.isfinite(initial_gap) or other_speed is None:
        return math.inf
    closing = (other_speed - ego_speed) if ahead else (ego_speed - other_speed)
    return initial_gap + closing * t
