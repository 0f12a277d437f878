"""Polynomial lane-change trajectory planning, validation, and simulation."""

from .behavior import (
    Action,
    DecisionFactors,
    GapPolicy,
    GateCode,
    ManeuverDecision,
    compute_factors,
    decide,
)
from .config import ScenarioConfig, VehicleState
from .constraints import ConstraintLimits, ConstraintReport, check, combined_accel
from .poly import LinearSystem, Polynomial, SingularSystem, solve
from .scenario_io import SCENARIO_SCHEMA, ScenarioError, load_scenario
from .simulation import RectFootprint, SimResult, SimStep, run, separation
from .trajectory import (
    BoundaryCondition,
    BoundaryConditionSet,
    InfeasibleManeuver,
    ManeuverParams,
    TrajectoryFamily,
    TrajectoryPlan,
    TrajectorySample,
    build_plan,
    lateral_quintic,
    lateral_septic,
    longitudinal_quartic,
    longitudinal_quintic,
    longitudinal_sextic,
    maneuver_distance,
    maneuver_duration,
    sample,
    time_grid,
)

__version__ = "0.1.0"
