"""Reversible process legs: isothermal, constant quantum number, constant width.

Sign conventions: work is positive when the system pushes the wall outward,
heat is positive when energy flows into the system.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError, LegError
from .oracle import PowerLaw
from .well import (
    NORM_TOL,
    UnitSystem,
    WellState,
    eigen_energy,
    occupations_close,
    state_energy,
)

__all__ = [
    "ConstantN",
    "ConstantWidth",
    "Isothermal",
    "LegKind",
    "ProcessLeg",
    "isothermal_leg",
    "isothermal_occupation",
    "isothermal_ref_width",
    "leg_energy",
    "leg_heat",
    "leg_occupation",
    "leg_pressure",
    "leg_pressure_law",
    "leg_state",
    "leg_work_closed_form",
    "states_match",
    "validate_leg",
]

ENERGY_RTOL = 1e-10
# slack on the isothermal domain edges, absorbs rounding in the reference width
EDGE_RTOL = 1e-12


@dataclass(frozen=True)
class Isothermal:
    """Energy expectation held at ``energy`` while levels 1 and 2 mix."""

    energy: float

    def __post_init__(self):
        if not (self.energy > 0.0 and math.isfinite(self.energy)):
            raise LegError(f"isothermal energy must be positive, got {self.energy!r}")


@dataclass(frozen=True)
class ConstantN:
    """Particle stays in eigenstate ``n`` while the width changes."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise LegError(f"quantum number must be a positive integer, got {self.n!r}")


@dataclass(frozen=True)
class ConstantWidth:
    """Occupations change at fixed ``width``."""

    width: float

    def __post_init__(self):
        if not (self.width > 0.0 and math.isfinite(self.width)):
            raise LegError(f"width must be positive, got {self.width!r}")


LegKind = Union[Isothermal, ConstantN, ConstantWidth]


@dataclass(frozen=True)
class ProcessLeg:
    kind: LegKind
    start: WellState
    end: WellState

    @property
    def interval(self) -> tuple[float, float]:
        a, b = self.start.width, self.end.width
        return (a, b) if a <= b else (b, a)

    def reversed(self) -> ProcessLeg:
        return ProcessLeg(self.kind, self.end, self.start)


def validate_leg(leg: ProcessLeg, units: UnitSystem) -> ProcessLeg:
    """Check the endpoint invariants of ``leg``; returns it unchanged."""
    kind = leg.kind
    if isinstance(kind, Isothermal):
        for label, st in (("start", leg.start), ("end", leg.end)):
            if any(p != 0.0 for p in st.occupations[2:]):
                raise LegError(f"isothermal {label} state occupies levels above n = 2")
            e = state_energy(st, units)
            if abs(e - kind.energy) > ENERGY_RTOL * kind.energy:
                raise LegError(
                    f"isothermal {label} energy {e!r} differs from leg energy {kind.energy!r}"
                )
    elif isinstance(kind, ConstantN):
        if not (leg.start.is_pure(kind.n) and leg.end.is_pure(kind.n)):
            raise LegError(f"constant-n leg endpoints must both be pure n = {kind.n}")
        if leg.start.width == leg.end.width:
            raise LegError("constant-n leg must change the width")
    elif isinstance(kind, ConstantWidth):
        if not leg.start.width == leg.end.width == kind.width:
            raise LegError("constant-width leg endpoints must share the leg width")
    else:
        raise LegError(f"unknown leg kind {kind!r}")
    return leg


def isothermal_ref_width(energy: float, units: UnitSystem) -> float:
    """Width at which the pure ground state has the given energy."""
    return math.pi * units.hbar / math.sqrt(2.0 * units.mass * energy)


def isothermal_occupation(L: float, L_ref: float) -> float:
    """Ground-state weight |a_1|^2 = (4 - L^2/L_ref^2)/3 on an isotherm.

    Valid for ``L_ref <= L <= 2 L_ref``: pure n = 1 at the short end, pure
    n = 2 at the long end.
    """
    if not L_ref > 0.0:
        raise DomainError(f"reference width must be positive, got {L_ref!r}")
    lo, hi = L_ref * (1.0 - EDGE_RTOL), 2.0 * L_ref * (1.0 + EDGE_RTOL)
    if not lo <= L <= hi:
        raise DomainError(f"width {L!r} outside isothermal domain [{L_ref!r}, {2 * L_ref!r}]")
    r = L / L_ref
    return min(1.0, max(0.0, (4.0 - r * r) / 3.0))


def isothermal_leg(energy: float, start_width: float, end_width: float,
                   units: UnitSystem) -> ProcessLeg:
    """Isotherm at ``energy`` between two widths, endpoint mixtures filled in."""
    ref = isothermal_ref_width(energy, units)
    start = WellState.two_level(isothermal_occupation(start_width, ref), start_width)
    end = WellState.two_level(isothermal_occupation(end_width, ref), end_width)
    return validate_leg(ProcessLeg(Isothermal(energy), start, end), units)


def _check_in_leg(leg, L):
    lo, hi = leg.interval
    if not lo <= L <= hi:
        raise DomainError(f"width {L!r} outside leg interval [{lo!r}, {hi!r}]")


def leg_pressure(leg: ProcessLeg, L: float, units: UnitSystem) -> float:
    """Wall pressure at width ``L`` along the leg."""
    kind = leg.kind
    if isinstance(kind, ConstantWidth):
        raise DomainError("pressure is not a function of width on a constant-width leg")
    _check_in_leg(leg, L)
    if isinstance(kind, Isothermal):
        return 2.0 * kind.energy / L
    return kind.n * kind.n * units.energy_scale / (L * L * L)


def leg_pressure_law(leg: ProcessLeg, units: UnitSystem) -> PowerLaw:
    """The leg's pressure as a ``PowerLaw`` integrand for the quadrature oracle."""
    kind = leg.kind
    if isinstance(kind, Isothermal):
        return PowerLaw(2.0 * kind.energy, 1.0)
    if isinstance(kind, ConstantN):
        return PowerLaw(kind.n * kind.n * units.energy_scale, 3.0)
    raise DomainError("constant-width leg has no pressure law")


def leg_work_closed_form(leg: ProcessLeg, units: UnitSystem) -> float:
    """Signed work from start width to end width."""
    kind = leg.kind
    a, b = leg.start.width, leg.end.width
    # both forms avoid cancellation for nearby widths and negate exactly
    # when the endpoints are swapped
    if isinstance(kind, Isothermal):
        if b >= a:
            return 2.0 * kind.energy * math.log1p((b - a) / a)
        return -(2.0 * kind.energy * math.log1p((a - b) / b))
    if isinstance(kind, ConstantN):
        coef = kind.n * kind.n * units.energy_scale / 2.0
        ab = a * b
        return coef * (b - a) * (a + b) / (ab * ab)
    return 0.0


def leg_heat(leg: ProcessLeg, units: UnitSystem) -> float:
    kind = leg.kind
    if isinstance(kind, Isothermal):
        return leg_work_closed_form(leg, units)
    if isinstance(kind, ConstantN):
        return 0.0
    return state_energy(leg.end, units) - state_energy(leg.start, units)


def leg_energy(leg: ProcessLeg, L: float, units: UnitSystem) -> float:
    """Energy expectation at width ``L`` along a width-changing leg."""
    kind = leg.kind
    if isinstance(kind, ConstantWidth):
        raise DomainError("energy is not a function of width on a constant-width leg")
    _check_in_leg(leg, L)
    if isinstance(kind, Isothermal):
        return kind.energy
    return eigen_energy(kind.n, L, units)


def leg_occupation(leg: ProcessLeg, L: float, units: UnitSystem) -> float:
    """Ground-state weight |a_1|^2 at width ``L`` along a width-changing leg."""
    kind = leg.kind
    if isinstance(kind, ConstantWidth):
        raise DomainError("occupation is not a function of width on a constant-width leg")
    _check_in_leg(leg, L)
    if isinstance(kind, Isothermal):
        # endpoints are stored exactly; only interior points need the formula
        if L == leg.start.width:
            return leg.start.occupation(1)
        if L == leg.end.width:
            return leg.end.occupation(1)
        return isothermal_occupation(L, isothermal_ref_width(kind.energy, units))
    return 1.0 if kind.n == 1 else 0.0


def leg_state(leg: ProcessLeg, L: float, units: UnitSystem) -> WellState:
    """Full occupation state at width ``L`` along a width-changing leg."""
    kind = leg.kind
    if isinstance(kind, ConstantN):
        _check_in_leg(leg, L)
        return WellState.pure(kind.n, L)
    return WellState.two_level(leg_occupation(leg, L, units), L)


def states_match(a: WellState, b: WellState, units: UnitSystem) -> bool:
    """Vertex matching: exact widths, occupations to 1e-12, energies to 1e-10."""
    if a.width != b.width:
        return False
    if not occupations_close(a.occupations, b.occupations, NORM_TOL):
        return False
    ea, eb = state_energy(a, units), state_energy(b, units)
    return abs(ea - eb) <= ENERGY_RTOL * max(abs(ea), abs(eb))
