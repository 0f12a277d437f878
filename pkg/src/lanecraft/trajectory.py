"""Lane-change trajectory construction from boundary conditions.

Four trajectory families are supported, each pairing a longitudinal with a
lateral polynomial:

==========  ====================  ===============
family      longitudinal degree   lateral degree
==========  ====================  ===============
quartic     4                     5
quintic     5                     5
sextic      6 (free t^6 coeff)    5
septic      6 (free t^6 coeff)    7
==========  ====================  ===============

All coefficients come from solving the boundary-condition linear system
directly rather than from transcribed closed forms; the closed forms are
kept to the test suite as independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .poly import LinearSystem, Polynomial, SingularSystem, solve

# Durations outside this window still produce a plan but get flagged,
# since the acceleration envelope is unlikely to be drivable.
DURATION_COMFORT_RANGE = (1.0, 60.0)


class InfeasibleManeuver(Exception):
    """The requested maneuver admits no valid finite-duration plan."""


class TrajectoryFamily(Enum):
    """Longitudinal/lateral polynomial pairing for a plan."""

    QUARTIC = "quartic"
    QUINTIC = "quintic"
    SEXTIC = "sextic"
    SEPTIC = "septic"

    @property
    def longitudinal_degree(self) -> int:
        return {"quartic": 4, "quintic": 5, "sextic": 6, "septic": 6}[self.value]

    @property
    def lateral_degree(self) -> int:
        return 7 if self is TrajectoryFamily.SEPTIC else 5


@dataclass(frozen=True)
class BoundaryCondition:
    """One imposed derivative value: order 0..3, at t=0 or t=duration."""

    order: int
    time: float
    value: float


@dataclass(frozen=True)
class BoundaryConditionSet:
    """Constraints that pin a polynomial of matching coefficient count.

    ``conditions`` are derivative values at the endpoints; ``pinned`` holds
    (coefficient index, value) pairs for under-determined systems such as the
    sextic longitudinal, where the t^6 coefficient is chosen up front.
    """

    duration: float
    conditions: tuple[BoundaryCondition, ...]
    pinned: tuple[tuple[int, float], ...] = ()

    def __post_init__(self) -> None:
        if self.duration <= 0.0:
            raise SingularSystem(
                f"degenerate boundary conditions: duration {self.duration} <= 0"
            )
        seen = set()
        for cond in self.conditions:
            if cond.order < 0 or cond.order > 3:
                raise ValueError(f"derivative order {cond.order} outside 0..3")
            if cond.time not in (0.0, self.duration):
                raise ValueError(
                    f"boundary time {cond.time} is neither 0 nor {self.duration}"
                )
            key = (cond.order, cond.time)
            if key in seen:
                raise ValueError(f"duplicate boundary condition {key}")
            seen.add(key)

    @property
    def coefficient_count(self) -> int:
        return len(self.conditions) + len(self.pinned)

    def system(self) -> LinearSystem:
        """Assemble the square system whose unknowns are the coefficients."""
        n = self.coefficient_count
        rows = []
        rhs = []
        for cond in self.conditions:
            row = [0.0] * n
            for j in range(cond.order, n):
                row[j] = math.perm(j, cond.order) * cond.time ** (j - cond.order)
            rows.append(tuple(row))
            rhs.append(cond.value)
        for index, value in self.pinned:
            row = [0.0] * n
            row[index] = 1.0
            rows.append(tuple(row))
            rhs.append(value)
        return LinearSystem(matrix=tuple(rows), rhs=tuple(rhs))

    def solve_polynomial(self) -> Polynomial:
        return Polynomial(tuple(solve(self.system())))


@dataclass(frozen=True)
class ManeuverParams:
    """Scenario quantities that parameterize a lane-change plan.

    ``duration`` and ``travel_distance`` may be left unset; :meth:`resolve`
    fills them from the closing-speed geometry (see
    :func:`maneuver_duration` / :func:`maneuver_distance`).
    """

    initial_speed: float
    target_speed: float
    lead_speed: float
    lead_distance: float
    safety_distance: float
    lane_width: float
    a6: float = 0.01
    duration: float | None = None
    travel_distance: float | None = None

    def resolve(self) -> "ManeuverParams":
        """Return a copy with duration and travel distance filled in."""
        duration = self.duration
        if duration is None:
            if not math.isfinite(self.lead_distance):
                raise InfeasibleManeuver(
                    "no lead vehicle to derive a duration from; "
                    "set an explicit duration override"
                )
            duration = maneuver_duration(self)
        if duration <= 0.0:
            raise InfeasibleManeuver(
                f"maneuver duration {duration:.6g} s is not positive"
            )
        resolved = replace(self, duration=duration)
        distance = self.travel_distance
        if distance is None:
            distance = maneuver_distance(resolved)
        if distance <= 0.0:
            raise InfeasibleManeuver(
                f"maneuver travel distance {distance:.6g} m is not positive"
            )
        return replace(resolved, travel_distance=distance)


@dataclass(frozen=True)
class TrajectoryPlan:
    """Paired longitudinal/lateral polynomials over one maneuver duration."""

    longitudinal: Polynomial
    lateral: Polynomial
    duration: float
    family: TrajectoryFamily
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class TrajectorySample:
    """Pose and its first three time derivatives at one sample instant."""

    time: float
    x: float
    y: float
    vx: float
    vy: float
    ax: float
    ay: float
    jx: float
    jy: float


def maneuver_duration(params: ManeuverParams) -> float:
    """Duration to close the gap to the lead down to the safety distance.

    With the ego averaging (initial + target)/2 and the lead holding speed,
    the gap shrinks from ``lead_distance`` to ``safety_distance`` after

        2 * (lead_distance - safety_distance)
        -------------------------------------
        target_speed + initial_speed - 2 * lead_speed

    A non-positive denominator means the gap never closes; no finite
    duration exists and :class:`InfeasibleManeuver` is raised. A zero or
    negative numerator yields a non-positive result, which downstream
    validation rejects.
    """
    denominator = params.target_speed + params.initial_speed - 2.0 * params.lead_speed
    if denominator <= 0.0:
        raise InfeasibleManeuver(
            f"closing-speed denominator {denominator:.6g} m/s is not positive; "
            "the gap to the lead vehicle never shrinks to the safety distance"
        )
    return 2.0 * (params.lead_distance - params.safety_distance) / denominator


def maneuver_distance(params: ManeuverParams) -> float:
    """Longitudinal distance covered: duration times the mean ego speed."""
    if params.duration is None or params.duration <= 0.0:
        raise ValueError("maneuver_distance requires a positive duration")
    return params.duration / 2.0 * (params.target_speed + params.initial_speed)


def lateral_quintic(lane_width: float, duration: float) -> Polynomial:
    """Degree-5 lateral profile: rest-to-rest displacement of one lane width.

    Position, velocity, and acceleration are zero at t=0; at t=duration the
    position equals ``lane_width`` with velocity and acceleration zero again.
    """
    bcs = BoundaryConditionSet(
        duration=duration,
        conditions=(
            BoundaryCondition(0, 0.0, 0.0),
            BoundaryCondition(1, 0.0, 0.0),
            BoundaryCondition(2, 0.0, 0.0),
            BoundaryCondition(0, duration, lane_width),
            BoundaryCondition(1, duration, 0.0),
            BoundaryCondition(2, duration, 0.0),
        ),
    )
    return bcs.solve_polynomial()


def lateral_septic(lane_width: float, duration: float) -> Polynomial:
    """Degree-7 lateral profile that additionally zeroes jerk at both ends."""
    bcs = BoundaryConditionSet(
        duration=duration,
        conditions=(
            BoundaryCondition(0, 0.0, 0.0),
            BoundaryCondition(1, 0.0, 0.0),
            BoundaryCondition(2, 0.0, 0.0),
            BoundaryCondition(3, 0.0, 0.0),
            BoundaryCondition(0, duration, lane_width),
            BoundaryCondition(1, duration, 0.0),
            BoundaryCondition(2, duration, 0.0),
            BoundaryCondition(3, duration, 0.0),
        ),
    )
    return bcs.solve_polynomial()


def longitudinal_quartic(
    initial_speed: float, target_speed: float, duration: float
) -> Polynomial:
    """Degree-4 longitudinal profile: speed transition, end position free.

    Five constraints (position/velocity/acceleration at start, velocity and
    acceleration at end) fix all five coefficients.
    """
    bcs = BoundaryConditionSet(
        duration=duration,
        conditions=(
            BoundaryCondition(0, 0.0, 0.0),
            BoundaryCondition(1, 0.0, initial_speed),
            BoundaryCondition(2, 0.0, 0.0),
            BoundaryCondition(1, duration, target_speed),
            BoundaryCondition(2, duration, 0.0),
        ),
    )
    return bcs.solve_polynomial()


def longitudinal_quintic(
    initial_speed: float, travel_distance: float, duration: float
) -> Polynomial:
    """Degree-5 longitudinal profile pinning the end position.

    End conditions are x(T)=travel_distance with the velocity returning to
    ``initial_speed`` and zero end acceleration, so the tail coefficients
    scale with (travel_distance - duration*initial_speed). A distinct end
    speed is the sextic family's job.
    """
    bcs = BoundaryConditionSet(
        duration=duration,
        conditions=(
            BoundaryCondition(0, 0.0, 0.0),
            BoundaryCondition(1, 0.0, initial_speed),
            BoundaryCondition(2, 0.0, 0.0),
            BoundaryCondition(0, duration, travel_distance),
            BoundaryCondition(1, duration, initial_speed),
            BoundaryCondition(2, duration, 0.0),
        ),
    )
    return bcs.solve_polynomial()


def longitudinal_sextic(
    initial_speed: float,
    target_speed: float,
    travel_distance: float,
    duration: float,
    a6: float,
) -> Polynomial:
    """Degree-6 longitudinal profile with the t^6 coefficient pinned to a6.

    The six remaining coefficients absorb the start conditions plus end
    position, end speed, and zero end acceleration. The free coefficient
    reshapes the longitudinal path (for obstacle clearance) without touching
    any boundary value.
    """
    bcs = BoundaryConditionSet(
        duration=duration,
        conditions=(
            BoundaryCondition(0, 0.0, 0.0),
            BoundaryCondition(1, 0.0, initial_speed),
            BoundaryCondition(2, 0.0, 0.0),
            BoundaryCondition(0, duration, travel_distance),
            BoundaryCondition(1, duration, target_speed),
            BoundaryCondition(2, duration, 0.0),
        ),
        pinned=((6, a6),),
    )
    return bcs.solve_polynomial()


def build_plan(params: ManeuverParams, family: TrajectoryFamily) -> TrajectoryPlan:
    """Assemble the longitudinal/lateral pair for the requested family."""
    resolved = params.resolve()
    duration = resolved.duration
    distance = resolved.travel_distance
    assert duration is not None and distance is not None

    if family is TrajectoryFamily.QUARTIC:
        longitudinal = longitudinal_quartic(
            resolved.initial_speed, resolved.target_speed, duration
        )
    elif family is TrajectoryFamily.QUINTIC:
        longitudinal = longitudinal_quintic(resolved.initial_speed, distance, duration)
    else:
        longitudinal = longitudinal_sextic(
            resolved.initial_speed,
            resolved.target_speed,
            distance,
            duration,
            resolved.a6,
        )

    if family is TrajectoryFamily.SEPTIC:
        lateral = lateral_septic(resolved.lane_width, duration)
    else:
        lateral = lateral_quintic(resolved.lane_width, duration)

    warnings = ()
    low, high = DURATION_COMFORT_RANGE
    if not low <= duration <= high:
        warnings = (
            f"duration {duration:.3f} s outside the comfortable range "
            f"[{low:g}, {high:g}] s; acceleration limits are unlikely to hold",
        )
    return TrajectoryPlan(
        longitudinal=longitudinal,
        lateral=lateral,
        duration=duration,
        family=family,
        warnings=warnings,
    )


def time_grid(duration: float, dt: float) -> list[float]:
    """Sample instants 0, dt, 2*dt, ... with the duration always included."""
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    if duration <= 0.0:
        raise ValueError(f"duration must be positive, got {duration}")
    steps = int(math.floor(duration / dt + 1e-9))
    grid = [i * dt for i in range(steps)]
    last = steps * dt
    if last < duration - 1e-9 * max(1.0, duration):
        grid.append(last)
    grid.append(duration)
    return grid


def sample(plan: TrajectoryPlan, dt: float) -> list[TrajectorySample]:
    """Sample pose and derivatives on the uniform grid ending exactly at T."""
    if dt > plan.duration:
        raise ValueError(f"dt {dt} exceeds plan duration {plan.duration}")
    lon = [plan.longitudinal.derivative(k) for k in range(4)]
    lat = [plan.lateral.derivative(k) for k in range(4)]
    samples = []
    for t in time_grid(plan.duration, dt):
        samples.append(
            TrajectorySample(
                time=t,
                x=lon[0](t),
                y=lat[0](t),
                vx=lon[1](t),
                vy=lat[1](t),
                ax=lon[2](t),
                ay=lat[2](t),
                jx=lon[3](t),
                jy=lat[3](t),
            )
        )
    return samples
