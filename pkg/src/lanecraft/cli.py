"""Command-line front end: plan, simulate, and compare lane-change scenarios.

Exit codes (disjoint; 0 is the only success code):

    0  success (feasible plan / clear simulation)
    1  scenario parse or validation failure
    2  plan violates kinematic constraints
    3  maneuver infeasible (no valid duration, or planner abort)
    4  simulation detected a collision

The ``LANECRAFT_LOG`` environment variable selects diagnostic verbosity
(error, info, or debug).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from .constraints import check
from .poly import SingularSystem
from .reporting import (
    decision_lines,
    plan_report_lines,
    write_comparison_csv,
    write_lines,
    write_sim_csv,
    write_trajectory_csv,
)
from .scenario_io import ScenarioError, load_scenario
from .simulation import run
from .svgplot import write_line_plot
from .trajectory import InfeasibleManeuver, TrajectoryFamily, build_plan, sample

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATIONS = 2
EXIT_INFEASIBLE = 3
EXIT_COLLISION = 4

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    # keep exit code 2 reserved for constraint violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lanecraft", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    plan = sub.add_parser("plan", help="generate and validate one trajectory plan")
    plan.add_argument("scenario", help="scenario YAML file")
    plan.add_argument(
        "--family", choices=[f.value for f in TrajectoryFamily], help="override family"
    )
    plan.add_argument("--out", required=True, help="output directory")
    plan.add_argument("--a6", type=float, help="override the free t^6 coefficient")
    plan.add_argument("--T", dest="duration", type=float, help="override duration [s]")
    plan.add_argument("--dt", type=float, help="override sample step [s]")

    simulate = sub.add_parser("simulate", help="run the planner and play the maneuver back")
    simulate.add_argument("scenario")
    simulate.add_argument("--out", required=True)
    simulate.add_argument(
        "--force-maneuver",
        action="store_true",
        help="bypass the decision gates and execute the lane change",
    )

    compare = sub.add_parser("compare", help="evaluate all four families on one scenario")
    compare.add_argument("scenario")
    compare.add_argument("--out", required=True)
    compare.add_argument(
        "--a6-sweep",
        help="comma-separated a6 values; families are re-evaluated per value",
    )
    return parser


def _load(args) -> "ScenarioConfig":
    config = load_scenario(args.scenario)
    if getattr(args, "family", None):
        config = replace(config, family=TrajectoryFamily(args.family))
    if getattr(args, "a6", None) is not None:
        config = replace(config, a6=args.a6)
    if getattr(args, "duration", None) is not None:
        config = replace(config, duration_override=args.duration)
    if getattr(args, "dt", None) is not None:
        config = replace(config, dt=args.dt)
    return config


def cmd_plan(args) -> int:
    config = _load(args)
    params = config.maneuver_params().resolve()
    plan = build_plan(params, config.family)
    samples = sample(plan, config.dt)
    report = check(plan, config.limits, config.dt)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_trajectory_csv(out / "trajectory.csv", samples)
    write_lines(
        out / "report.txt",
        plan_report_lines(config.name, plan, params.travel_distance, report),
    )

    ts = [s.time for s in samples]
    xs = [s.x for s in samples]
    ys = [s.y for s in samples]
    write_line_plot(
        out / "path_xy.svg",
        [(config.family.value, xs, ys)],
        f"Lane-change path ({config.family.value})",
        "x [m]",
        "y [m]",
    )
    write_line_plot(
        out / "lateral_vs_time.svg",
        [("y(t)", ts, ys)],
        "Lateral displacement",
        "t [s]",
        "y [m]",
    )
    write_line_plot(
        out / "longitudinal_vs_time.svg",
        [("x(t)", ts, xs)],
        "Longitudinal displacement",
        "t [s]",
        "x [m]",
    )
    write_line_plot(
        out / "accel_vs_time.svg",
        [
            ("longitudinal", ts, [s.ax for s in samples]),
            ("lateral", ts, [s.ay for s in samples]),
            ("combined", ts, [float(np.hypot(s.ax, s.ay)) for s in samples]),
        ],
        "Acceleration profiles",
        "t [s]",
        "accel [m/s^2]",
    )

    print(f"plan: {config.name} family={config.family.value} T={plan.duration:.3f} s")
    print(f"feasible: {report.feasible} ({len(report.violations)} violations)")
    logger.info("outputs written to %s", out)
    return EXIT_OK if report.feasible else EXIT_VIOLATIONS


def cmd_simulate(args) -> int:
    config = _load(args)
    result = run(config, force_maneuver=args.force_maneuver)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    verdict = "COLLISION" if result.collision else "CLEAR"
    write_sim_csv(out / "sim.csv", result, [v.vehicle_id for v in config.others])
    write_lines(out / "decision.txt", decision_lines(result.decision, verdict))

    print(f"decision: {result.decision.action.value} ({result.decision.reason.value})")
    if result.min_separation_vehicle is not None:
        print(
            f"min separation: {result.min_separation:.3f} m to "
            f"{result.min_separation_vehicle} at t={result.min_separation_time:.2f} s"
        )
    print(verdict)
    return EXIT_COLLISION if result.collision else EXIT_OK


def cmd_compare(args) -> int:
    config = _load(args)
    base_params = config.maneuver_params().resolve()
    sweep = [config.a6]
    if args.a6_sweep:
        sweep = [float(v) for v in args.a6_sweep.split(",")]

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    overlay = []
    for a6 in sweep:
        for family in TrajectoryFamily:
            plan = build_plan(replace(base_params, a6=a6), family)
            report = check(plan, config.limits, config.dt)
            rows.append(
                {
                    "family": family.value,
                    "a6": a6,
                    "duration": plan.duration,
                    "distance": base_params.travel_distance,
                    "peak_combined_accel": report.peak_combined_accel.value,
                    "peak_longitudinal_accel": report.peak_longitudinal_accel.value,
                    "peak_longitudinal_decel": report.peak_longitudinal_decel.value,
                    "peak_lateral_accel": report.peak_lateral_accel,
                    "peak_jerk_long": report.peak_jerk_long,
                    "peak_jerk_lat": report.peak_jerk_lat,
                    "y_end": float(plan.lateral(plan.duration)),
                    "feasible": report.feasible,
                }
            )
            if a6 == sweep[0]:
                samples = sample(plan, config.dt)
                overlay.append(
                    (family.value, [s.x for s in samples], [s.y for s in samples])
                )
    write_comparison_csv(out / "comparison.csv", rows)
    write_line_plot(
        out / "overlay_xy.svg",
        overlay,
        "Lane-change paths by family",
        "x [m]",
        "y [m]",
    )
    print(f"compared {len(rows)} family/a6 combinations -> {out / 'comparison.csv'}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"plan": cmd_plan, "simulate": cmd_simulate, "compare": cmd_compare}[
        args.command
    ]
    try:
        return handler(args)
    except ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (InfeasibleManeuver, SingularSystem) as exc:
        print(f"infeasible maneuver: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


def _configure_logging() -> None:
    level = os.environ.get("LANECRAFT_LOG", "error").strip().lower()
    chosen = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        level, logging.ERROR
    )
    logging.basicConfig(level=chosen, format="%(levelname)s %(name)s: %(message)s")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
