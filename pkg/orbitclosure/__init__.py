"""
orbitclosure - orbit closures and degenerations of modules over path algebras
"""

__version__ = "0.1.0"

from .cli import cli
from .config import Config
from .degen import (
    DegenPoset,
    Stratum,
    build_poset,
    check_chi_bounds,
    enumerate_boundary,
    euler_characteristic,
)
from .errors import OrbitClosureError
from .orbit import orbit_descriptor, same_orbit
from .problem import ProblemSpec, bundled_problem, load_problem, parse_problem
from .surface_lab import CurveConfig, blow_down, blow_up, hirzebruch

__all__ = [
    "cli",
    "Config",
    "DegenPoset",
    "Stratum",
    "build_poset",
    "check_chi_bounds",
    "enumerate_boundary",
    "euler_characteristic",
    "OrbitClosureError",
    "orbit_descriptor",
    "same_orbit",
    "ProblemSpec",
    "bundled_problem",
    "load_problem",
    "parse_problem",
    "CurveConfig",
    "blow_down",
    "blow_up",
    "hirzebruch",
]
