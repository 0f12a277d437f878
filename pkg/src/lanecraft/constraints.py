"""Kinematic validation of trajectory plans against acceleration limits.

The combined acceleration is the Euclidean magnitude sqrt(ax^2 + ay^2) and
must stay below the upper limit; longitudinal acceleration must additionally
stay inside [accel_min, accel_max], and forward motion (vx > 0) is required
by default. Jerk peaks are reported for smoothness assessment but are not
constrained. Detection is grid-based; plan polynomials are smooth and low
degree, so a dt around 0.01 s resolves every excursion (tests pin a 1%
stability bound under grid refinement).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .trajectory import TrajectoryPlan, time_grid


@dataclass(frozen=True)
class ConstraintLimits:
    """Acceleration envelope and the forward-motion requirement."""

    accel_max: float = 2.0
    accel_min: float = -3.0
    require_forward: bool = True

    def __post_init__(self) -> None:
        if not self.accel_min < 0.0 < self.accel_max:
            raise ValueError(
                f"limits must satisfy accel_min < 0 < accel_max, "
                f"got [{self.accel_min}, {self.accel_max}]"
            )


@dataclass(frozen=True)
class Peak:
    value: float
    time: float


@dataclass(frozen=True)
class Violation:
    time: float
    kind: str  # "combined", "a_max", "a_min", or "forward"
    value: float


@dataclass(frozen=True)
class ConstraintReport:
    feasible: bool
    peak_combined_accel: Peak
    peak_longitudinal_accel: Peak
    peak_longitudinal_decel: Peak
    peak_lateral_accel: float
    peak_jerk_long: float
    peak_jerk_lat: float
    violations: tuple[Violation, ...]


def combined_accel(plan: TrajectoryPlan, t):
    """Total acceleration magnitude sqrt(ax^2 + ay^2) at time ``t``."""
    return np.hypot(plan.longitudinal.derivative(2)(t), plan.lateral.derivative(2)(t))


def check(plan: TrajectoryPlan, limits: ConstraintLimits, dt: float = 0.01) -> ConstraintReport:
    """Evaluate the plan on the grid 0, dt, ..., T and report every violation.

    Infeasibility is an outcome, not an error: the report's ``feasible`` flag
    is true exactly when the violation list is empty.
    """
    if dt <= 0.0 or dt > plan.duration / 10.0:
        raise ValueError(
            f"dt must satisfy 0 < dt <= duration/10, got dt={dt} "
            f"for duration {plan.duration}"
        )
    ts = np.array(time_grid(plan.duration, dt))
    vx = plan.longitudinal.derivative(1)(ts)
    ax = plan.longitudinal.derivative(2)(ts)
    ay = plan.lateral.derivative(2)(ts)
    jx = plan.longitudinal.derivative(3)(ts)
    jy = plan.lateral.derivative(3)(ts)
    fa = np.hypot(ax, ay)

    violations: list[Violation] = []
    for i, t in enumerate(ts):
        if fa[i] >= limits.accel_max:
            violations.append(Violation(float(t), "combined", float(fa[i])))
        if ax[i] > limits.accel_max:
            violations.append(Violation(float(t), "a_max", float(ax[i])))
        if ax[i] < limits.accel_min:
            violations.append(Violation(float(t), "a_min", float(ax[i])))
        if limits.require_forward and vx[i] <= 0.0:
            violations.append(Violation(float(t), "forward", float(vx[i])))

    i_fa = int(np.argmax(fa))
    i_acc = int(np.argmax(ax))
    i_dec = int(np.argmin(ax))
    return ConstraintReport(
        feasible=not violations,
        peak_combined_accel=Peak(float(fa[i_fa]), float(ts[i_fa])),
        peak_longitudinal_accel=Peak(float(ax[i_acc]), float(ts[i_acc])),
        peak_longitudinal_decel=Peak(float(ax[i_dec]), float(ts[i_dec])),
        peak_lateral_accel=float(np.max(np.abs(ay))),
        peak_jerk_long=float(np.max(np.abs(jx))),
        peak_jerk_lat=float(np.max(np.abs(jy))),
        violations=tuple(violations),
    )
