"""Stirling and Ericsson cycles built from process legs, and their metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ClosureError, DegenerateCycleError, ParameterError
from .legs import (
    ConstantN,
    Isothermal,
    ProcessLeg,
    leg_heat,
    leg_pressure_law,
    leg_work_closed_form,
    states_match,
    validate_leg,
)
from .oracle import QuadratureConfig, integrate
from .well import UnitSystem, WellState, eigen_energy

__all__ = [
    "CYCLE_NAMES",
    "LEG_IDS",
    "Cycle",
    "CycleMetrics",
    "build_cycle",
    "build_ericsson",
    "build_stirling",
    "cycle_metrics",
    "efficiency_closed_form",
    "quadrature_leg_work",
]

CYCLE_NAMES = ("stirling", "ericsson")
LEG_IDS = ("1→2", "2→3", "3→4", "4→1")


@dataclass(frozen=True)
class Cycle:
    name: str
    legs: tuple[ProcessLeg, ...]
    units: UnitSystem

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(self.legs))
        if not self.legs:
            raise ClosureError("a cycle needs at least one leg")
        for leg in self.legs:
            validate_leg(leg, self.units)
        self.check_closure()
        if not any(leg_heat(leg, self.units) > 0.0 for leg in self.legs):
            raise DegenerateCycleError(f"cycle {self.name!r} absorbs no heat")

    def check_closure(self) -> None:
        n = len(self.legs)
        for k, leg in enumerate(self.legs):
            nxt = self.legs[(k + 1) % n]
            if not states_match(leg.end, nxt.start, self.units):
                raise ClosureError(
                    f"leg {k + 1} ends at {leg.end!r} but leg {(k + 1) % n + 1} "
                    f"starts at {nxt.start!r}"
                )

    @property
    def vertices(self) -> tuple[WellState, ...]:
        return tuple(leg.start for leg in self.legs)


@dataclass(frozen=True)
class CycleMetrics:
    per_leg_work: tuple[float, ...]
    per_leg_heat: tuple[float, ...]
    total_work: float
    heat_in: float
    efficiency: float
    e_hot: float
    e_cold: float
    oracle_residual: float

    def as_dict(self) -> dict:
        return {
            "per_leg_work": list(self.per_leg_work),
            "per_leg_heat": list(self.per_leg_heat),
            "total_work": self.total_work,
            "heat_in": self.heat_in,
            "efficiency": self.efficiency,
            "e_hot": self.e_hot,
            "e_cold": self.e_cold,
            "oracle_residual": self.oracle_residual,
        }


def _check_widths(**widths):
    for name, w in widths.items():
        if not (isinstance(w, (int, float)) and w > 0.0 and math.isfinite(w)):
            raise ParameterError(f"{name} must be a positive finite width, got {w!r}")


def _four_leg_cycle(name, short, long, units):
    # short: width of the pure ground state opening the hot isotherm
    # long: width of the pure n = 2 state opening the cold isotherm
    e_hot = eigen_energy(1, short, units)
    e_cold = eigen_energy(2, long, units)
    v1 = WellState.pure(1, short)
    v2 = WellState.pure(2, 2.0 * short)
    v3 = WellState.pure(2, long)
    v4 = WellState.pure(1, 0.5 * long)
    legs = (
        ProcessLeg(Isothermal(e_hot), v1, v2),
        ProcessLeg(ConstantN(2), v2, v3),
        ProcessLeg(Isothermal(e_cold), v3, v4),
        ProcessLeg(ConstantN(1), v4, v1),
    )
    return Cycle(name, legs, units)


def build_stirling(L1: float, L3: float, units: UnitSystem | None = None) -> Cycle:
    """Stirling cycle with vertex widths (L1, 2 L1, L3, L3/2).

    Requires ``L3 > 2 L1``; at equality the net work vanishes.
    """
    units = units or UnitSystem.natural()
    _check_widths(L1=L1, L3=L3)
    if not L3 > 2.0 * L1:
        raise ParameterError(f"stirling needs L3 > 2*L1, got L1={L1!r}, L3={L3!r}")
    return _four_leg_cycle("stirling", float(L1), float(L3), units)


def build_ericsson(L3: float, L1: float, units: UnitSystem | None = None) -> Cycle:
    """Ericsson cycle with vertex widths (L3, 2 L3, L1, L1/2).

    The hot isotherm starts from the ground state at ``L3`` and the cold one
    from n = 2 at ``L1``. Requires ``L1 > 2 L3``.
    """
    units = units or UnitSystem.natural()
    _check_widths(L1=L1, L3=L3)
    if not L1 > 2.0 * L3:
        raise ParameterError(f"ericsson needs L1 > 2*L3, got L1={L1!r}, L3={L3!r}")
    return _four_leg_cycle("ericsson", float(L3), float(L1), units)


def build_cycle(name: str, L1: float, L3: float, units: UnitSystem | None = None) -> Cycle:
    if name == "stirling":
        return build_stirling(L1, L3, units)
    if name == "ericsson":
        return build_ericsson(L3, L1, units)
    raise ParameterError(f"unknown cycle {name!r}; expected one of {CYCLE_NAMES}")


def quadrature_leg_work(leg: ProcessLeg, units: UnitSystem, cfg: QuadratureConfig) -> float:
    """Work on a leg by adaptive quadrature of its pressure law."""
    if leg.start.width == leg.end.width:
        return 0.0
    return integrate(leg_pressure_law(leg, units), leg.start.width, leg.end.width, cfg)


def cycle_metrics(cycle: Cycle, quadrature_tol: float = 1e-10) -> CycleMetrics:
    """Work, heat input and efficiency from closed forms, with an oracle residual."""
    cycle.check_closure()
    units = cycle.units
    cfg = QuadratureConfig(rel_tol=quadrature_tol)
    works = tuple(leg_work_closed_form(leg, units) for leg in cycle.legs)
    heats = tuple(leg_heat(leg, units) for leg in cycle.legs)
    heat_in = math.fsum(q for q in heats if q > 0.0)
    if heat_in <= 0.0:
        raise DegenerateCycleError(f"cycle {cycle.name!r} absorbs no heat")
    total = math.fsum(works)

    residual = 0.0
    for leg, w in zip(cycle.legs, works):
        if w == 0.0:
            continue
        q = quadrature_leg_work(leg, units, cfg)
        residual = max(residual, abs(q - w) / abs(w))

    levels = [leg.kind.energy for leg in cycle.legs if isinstance(leg.kind, Isothermal)]
    return CycleMetrics(
        per_leg_work=works,
        per_leg_heat=heats,
        total_work=total,
        heat_in=heat_in,
        efficiency=total / heat_in,
        e_hot=max(levels) if levels else math.nan,
        e_cold=min(levels) if levels else math.nan,
        oracle_residual=residual,
    )


def efficiency_closed_form(cycle_name: str, ratio: float) -> float:
    """1 - 4 ratio^2, with ratio = L1/L3 (stirling) or L3/L1 (ericsson)."""
    if cycle_name not in CYCLE_NAMES:
        raise ParameterError(f"unknown cycle {cycle_name!r}; expected one of {CYCLE_NAMES}")
    if not 0.0 < ratio < 0.5:
        raise ParameterError(f"width ratio must lie in (0, 1/2) for positive efficiency, got {ratio!r}")
    return 1.0 - 4.0 * ratio * ratio
