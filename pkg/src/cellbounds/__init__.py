"""Worst-case interference and rate guarantees for hardcore-regulated
cellular downlinks, with an empirical verifier for the almost-sure claims."""

from .bounds import (BallRegulation, ExclusionGeometry,
                     conditional_bound_general, exclusion_radius,
                     hardcore_regulation_constants, interference_bound,
                     legacy_bound, shot_noise_bound)
from .guarantees import (CriticalPower, InfeasibleError, LinkBudget,
                         RateGuarantee, critical_power, criticality_feasible,
                         rate_always_active, rate_scheduled, solve_critical_hk,
                         theta)
from .hexnet import HexConfig, HexRatePoint, hardcore_for_reuse, hex_rate_sweep
from .kernels import BACKEND
from .montecarlo import (ConfigurationError, TrialRecord, VerificationReport,
                         check_ball_regulation, check_interference_bound,
                         check_scheduled_bound, lattice_factory,
                         matern_factory, vertex_window)
from .pathloss import BoundedPowerLaw, DivergenceError, PathLossModel, Tabulated
from .pointset import (HardcoreSpec, MarkedPointSet, Rect,
                       UnsupportedReuseError, ball_count, color_lattice,
                       from_csv, gen_matern_ii, gen_triangular_lattice,
                       hardcore_family, nearest_index, nearest_point, to_csv,
                       verify_hardcore)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BallRegulation",
    "BoundedPowerLaw",
    "ConfigurationError",
    "CriticalPower",
    "DivergenceError",
    "ExclusionGeometry",
    "HardcoreSpec",
    "HexConfig",
    "HexRatePoint",
    "InfeasibleError",
    "LinkBudget",
    "MarkedPointSet",
    "PathLossModel",
    "RateGuarantee",
    "Rect",
    "Tabulated",
    "TrialRecord",
    "UnsupportedReuseError",
    "VerificationReport",
    "ball_count",
    "check_ball_regulation",
    "check_interference_bound",
    "check_scheduled_bound",
    "color_lattice",
    "conditional_bound_general",
    "critical_power",
    "criticality_feasible",
    "exclusion_radius",
    "from_csv",
    "gen_matern_ii",
    "gen_triangular_lattice",
    "hardcore_family",
    "hardcore_for_reuse",
    "hardcore_regulation_constants",
    "hex_rate_sweep",
    "interference_bound",
    "lattice_factory",
    "legacy_bound",
    "matern_factory",
    "nearest_index",
    "nearest_point",
    "rate_always_active",
    "rate_scheduled",
    "shot_noise_bound",
    "solve_critical_hk",
    "theta",
    "to_csv",
    "verify_hardcore",
    "vertex_window",
]
