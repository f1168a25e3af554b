"""Particle of mass m in a one-dimensional infinite square well.

Energies and pressures are closed-form functions of the well width and the
occupation probabilities |a_n|^2; phases never enter, so amplitudes are not
stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, NormalizationError

__all__ = [
    "MAX_LEVEL",
    "NORM_TOL",
    "UnitSystem",
    "WellState",
    "eigen_energy",
    "state_energy",
    "state_pressure",
]

MAX_LEVEL = 64
NORM_TOL = 1e-12
PI2 = math.pi * math.pi


@dataclass(frozen=True)
class UnitSystem:
    """Values of hbar and the particle mass used to scale energies."""

    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0.0 and math.isfinite(self.hbar)):
            raise DomainError(f"hbar must be positive and finite, got {self.hbar!r}")
        if not (self.mass > 0.0 and math.isfinite(self.mass)):
            raise DomainError(f"mass must be positive and finite, got {self.mass!r}")

    @classmethod
    def natural(cls) -> UnitSystem:
        return cls(1.0, 1.0)

    @property
    def energy_scale(self) -> float:
        """pi^2 hbar^2 / m, the common prefactor of every energy and pressure."""
        return PI2 * self.hbar**2 / self.mass


@dataclass(frozen=True)
class WellState:
    """Well width plus occupation probabilities, indexed from n = 1."""

    width: float
    occupations: tuple[float, ...]

    def __post_init__(self):
        occ = tuple(float(p) for p in self.occupations)
        object.__setattr__(self, "occupations", occ)
        if not (self.width > 0.0 and math.isfinite(self.width)):
            raise DomainError(f"width must be positive and finite, got {self.width!r}")
        if not 1 <= len(occ) <= MAX_LEVEL:
            raise NormalizationError(
                f"need between 1 and {MAX_LEVEL} occupations, got {len(occ)}"
            )
        for n, p in enumerate(occ, start=1):
            if not 0.0 <= p <= 1.0:
                raise NormalizationError(f"occupation of level {n} is {p!r}, outside [0, 1]")
        total = math.fsum(occ)
        if abs(total - 1.0) > NORM_TOL:
            raise NormalizationError(f"occupations sum to {total!r}, not 1")

    @classmethod
    def pure(cls, n: int, width: float) -> WellState:
        """Eigenstate n of a well of the given width."""
        _check_level(n)
        occ = [0.0] * n
        occ[n - 1] = 1.0
        return cls(width, tuple(occ))

    @classmethod
    def two_level(cls, a1_sq: float, width: float) -> WellState:
        """Mixture of the two lowest levels with ground-state weight ``a1_sq``."""
        return cls(width, (a1_sq, 1.0 - a1_sq))

    def with_width(self, width: float) -> WellState:
        return WellState(width, self.occupations)

    def occupation(self, n: int) -> float:
        return self.occupations[n - 1] if n <= len(self.occupations) else 0.0

    def is_pure(self, n: int, tol: float = NORM_TOL) -> bool:
        return abs(self.occupation(n) - 1.0) <= tol


def _check_level(n):
    if isinstance(n, bool) or int(n) != n or not 1 <= n <= MAX_LEVEL:
        raise DomainError(f"quantum number must be an integer in [1, {MAX_LEVEL}], got {n!r}")


def _check_width(L):
    if not (L > 0.0 and math.isfinite(L)):
        raise DomainError(f"width must be positive and finite, got {L!r}")


def eigen_energy(n: int, L: float, units: UnitSystem) -> float:
    """Energy n^2 pi^2 hbar^2 / (2 m L^2) of level ``n``.

    The operation order only rescales by powers of two when ``n`` and ``L``
    are doubled together, so E(1, L) == E(2, 2L) holds bit for bit.
    """
    _check_level(n)
    _check_width(L)
    return (n * n) * PI2 * units.hbar**2 / (2.0 * units.mass * L * L)


def _level_weight(state: WellState) -> float:
    # sum_n |a_n|^2 n^2
    return math.fsum(p * n * n for n, p in enumerate(state.occupations, start=1))


def state_energy(state: WellState, units: UnitSystem) -> float:
    """Expectation value of the Hamiltonian, sum_n |a_n|^2 E_n."""
    return _level_weight(state) * eigen_energy(1, state.width, units)


def state_pressure(state: WellState, units: UnitSystem) -> float:
    """Force on the wall, -dE/dL at fixed occupations."""
    L = state.width
    return _level_weight(state) * units.energy_scale / (L * L * L)


def occupations_close(a: Sequence[float], b: Sequence[float], tol: float = NORM_TOL) -> bool:
    """Compare two occupation vectors, padding the shorter with zeros."""
    n = max(len(a), len(b))
    pa = list(a) + [0.0] * (n - len(a))
    pb = list(b) + [0.0] * (n - len(b))
    return all(abs(x - y) <= tol for x, y in zip(pa, pb))
