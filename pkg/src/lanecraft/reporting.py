"""CSV and text-report writers for the command-line front end.

Every numeric CSV field uses one fixed format with 13 significant digits,
so output is byte-stable across runs and round-trips back to the same
float64 values.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Sequence

from .behavior import ManeuverDecision
from .constraints import ConstraintReport
from .simulation import SimResult
from .trajectory import TrajectoryPlan, TrajectorySample

TRAJECTORY_COLUMNS = ["t", "x", "y", "vx", "vy", "ax", "ay", "jx", "jy"]


def fnum(value: float) -> str:
    return f"{value:.12e}"


def write_trajectory_csv(path: str | Path, samples: Sequence[TrajectorySample]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(TRAJECTORY_COLUMNS)
        for s in samples:
            writer.writerow(
                fnum(v) for v in (s.time, s.x, s.y, s.vx, s.vy, s.ax, s.ay, s.jx, s.jy)
            )


def write_sim_csv(path: str | Path, result: SimResult, vehicle_ids: Sequence[str]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(TRAJECTORY_COLUMNS + [f"sep_{vid}" for vid in vehicle_ids])
        for step in result.steps:
            s = step.ego
            row = [s.time, s.x, s.y, s.vx, s.vy, s.ax, s.ay, s.jx, s.jy]
            writer.writerow([fnum(v) for v in row] + [fnum(v) for v in step.separations])


COMPARISON_COLUMNS = [
    "family",
    "a6",
    "duration",
    "distance",
    "peak_combined_accel",
    "peak_longitudinal_accel",
    "peak_longitudinal_decel",
    "peak_lateral_accel",
    "peak_jerk_long",
    "peak_jerk_lat",
    "y_end",
    "feasible",
]


def write_comparison_csv(path: str | Path, rows: Sequence[dict]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=COMPARISON_COLUMNS)
        writer.writeheader()
        for row in rows:
            formatted = {
                key: fnum(val) if isinstance(val, float) else val
                for key, val in row.items()
            }
            writer.writerow(formatted)


def plan_report_lines(
    name: str,
    plan: TrajectoryPlan,
    travel_distance: float,
    report: ConstraintReport,
) -> list[str]:
    lines = [
        f"scenario: {name}",
        f"family: {plan.family.value}",
        f"duration_s: {fnum(plan.duration)}",
        f"distance_m: {fnum(travel_distance)}",
        f"longitudinal_coeffs: {', '.join(fnum(c) for c in plan.longitudinal.coeffs)}",
        f"lateral_coeffs: {', '.join(fnum(c) for c in plan.lateral.coeffs)}",
        f"feasible: {report.feasible}",
        f"peak_combined_accel: {fnum(report.peak_combined_accel.value)}"
        f" at t={fnum(report.peak_combined_accel.time)}",
        f"peak_longitudinal_accel: {fnum(report.peak_longitudinal_accel.value)}"
        f" at t={fnum(report.peak_longitudinal_accel.time)}",
        f"peak_longitudinal_decel: {fnum(report.peak_longitudinal_decel.value)}"
        f" at t={fnum(report.peak_longitudinal_decel.time)}",
        f"peak_lateral_accel: {fnum(report.peak_lateral_accel)}",
        f"peak_jerk_long: {fnum(report.peak_jerk_long)}",
        f"peak_jerk_lat: {fnum(report.peak_jerk_lat)}",
        f"violations: {len(report.violations)}",
    ]
    for violation in report.violations[:10]:
        lines.append(
            f"violation: t={fnum(violation.time)} kind={violation.kind} "
            f"value={fnum(violation.value)}"
        )
    if len(report.violations) > 10:
        lines.append(f"violation: ... {len(report.violations) - 10} more")
    for warning in plan.warnings:
        lines.append(f"warning: {warning}")
    return lines


def decision_lines(decision: ManeuverDecision, verdict: str | None = None) -> list[str]:
    factors = decision.factors
    lines = [
        f"action: {decision.action.value}",
        f"reason: {decision.reason.value}",
        f"plan_family: {decision.plan_family.value if decision.plan_family else 'none'}",
        f"gap_target_lane: {factors.gap_target_lane}",
        f"v_target_lead: {factors.v_target_lead}",
        f"v_target_lag: {factors.v_target_lag}",
        f"v_ego: {factors.v_ego}",
        f"dist_to_lead_current: {factors.dist_to_lead_current}",
        f"dist_to_target_lead: {factors.dist_to_target_lead}",
        f"dist_to_target_lag: {factors.dist_to_target_lag}",
        f"est_maneuver_time: {factors.est_maneuver_time}",
        f"est_maneuver_distance: {factors.est_maneuver_distance}",
        f"time_overridden: {factors.time_overridden}",
    ]
    if verdict is not None:
        lines.append(f"verdict: {verdict}")
    return lines


def write_lines(path: str | Path, lines: Sequence[str]) -> None:
    Path(path).write_text("\n".join(lines) + "\n")
