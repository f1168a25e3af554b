"""Quantum Stirling and Ericsson engines with a particle in a 1D infinite square well."""

from .cycles import (
    Cycle,
    CycleMetrics,
    build_cycle,
    build_ericsson,
    build_stirling,
    cycle_metrics,
    efficiency_closed_form,
)
from .errors import (
    ClosureError,
    ConvergenceError,
    DegenerateCycleError,
    DomainError,
    LegError,
    NormalizationError,
    ParameterError,
    QwellError,
)
from .legs import (
    ConstantN,
    ConstantWidth,
    Isothermal,
    ProcessLeg,
    isothermal_leg,
    isothermal_occupation,
    leg_heat,
    leg_pressure,
    leg_work_closed_form,
)
from .oracle import BACKEND, PowerLaw, QuadratureConfig, finite_diff_pressure, integrate
from .well import UnitSystem, WellState, eigen_energy, state_energy, state_pressure

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClosureError",
    "ConstantN",
    "ConstantWidth",
    "ConvergenceError",
    "Cycle",
    "CycleMetrics",
    "DegenerateCycleError",
    "DomainError",
    "Isothermal",
    "LegError",
    "NormalizationError",
    "ParameterError",
    "PowerLaw",
    "ProcessLeg",
    "QuadratureConfig",
    "QwellError",
    "UnitSystem",
    "WellState",
    "build_cycle",
    "build_ericsson",
    "build_stirling",
    "cycle_metrics",
    "efficiency_closed_form",
    "eigen_energy",
    "finite_diff_pressure",
    "integrate",
    "isothermal_leg",
    "isothermal_occupation",
    "leg_heat",
    "leg_pressure",
    "leg_work_closed_form",
    "state_energy",
    "state_pressure",
]
