"""Numerical oracles: adaptive Simpson quadrature and finite-difference pressure.

These never look at a closed-form antiderivative, so they can check one.

The quadrature kernel comes from the compiled ``_simpson_ext`` extension when
it was built, otherwise from the pure-Python ``_simpson_py``. Setting the
environment variable ``QWELL_ENGINE_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

from . import _simpson_py
from .errors import ConvergenceError, DomainError
from .well import UnitSystem, WellState, state_energy

__all__ = [
    "BACKEND",
    "PowerLaw",
    "QuadratureConfig",
    "finite_diff_pressure",
    "integrate",
    "kernels",
]


def _load_kernels():
    if os.environ.get("QWELL_ENGINE_PURE_PYTHON", "") not in ("", "0"):
        return _simpson_py, "python"
    try:
        from . import _simpson_ext
    except ImportError:
        return _simpson_py, "python"
    return _simpson_ext, "compiled"


kernels, BACKEND = _load_kernels()


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_depth: int = 50

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise DomainError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not self.abs_tol > 0.0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if int(self.max_depth) != self.max_depth or self.max_depth < 1:
            raise DomainError(f"max_depth must be a positive integer, got {self.max_depth!r}")


@dataclass(frozen=True)
class PowerLaw:
    """The integrand ``coef * x**(-power)``, recognised by the compiled kernel."""

    coef: float
    power: float

    def __call__(self, x: float) -> float:
        return self.coef * math.pow(x, -self.power)


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    cfg: QuadratureConfig | None = None,
    *,
    backend=None,
) -> float:
    """Signed integral of ``f`` from ``a`` to ``b``.

    Exchanging the bounds negates the result exactly. ``PowerLaw`` integrands
    stay inside the kernel without calling back into Python.

    Raises
    ------
    ConvergenceError
        If some panel still misses tolerance at ``cfg.max_depth``.
    """
    cfg = cfg or QuadratureConfig()
    backend = backend or kernels
    a = float(a)
    b = float(b)
    if a == b:
        return 0.0
    if a > b:
        return -integrate(f, b, a, cfg, backend=backend)
    if isinstance(f, PowerLaw):
        if a <= 0.0:
            raise DomainError("power-law integrand needs a positive interval")
        value, err, ok = backend.adaptive_simpson_power(
            f.coef, f.power, a, b, cfg.rel_tol, cfg.abs_tol, cfg.max_depth
        )
    else:
        value, err, ok = backend.adaptive_simpson(
            f, a, b, cfg.rel_tol, cfg.abs_tol, cfg.max_depth
        )
    if not ok:
        raise ConvergenceError(
            f"quadrature on [{a!r}, {b!r}] did not converge within depth {cfg.max_depth}",
            value,
            err,
        )
    return value


def finite_diff_pressure(state: WellState, units: UnitSystem, h_rel: float = 1e-5) -> float:
    """Central difference -(E(L+h) - E(L-h)) / 2h with h = h_rel * L."""
    if not 0.0 < h_rel < 1.0:
        raise DomainError(f"h_rel must lie in (0, 1), got {h_rel!r}")
    L = state.width
    h = h_rel * L
    if not L - h > 0.0:
        raise DomainError(f"step {h!r} collapses the well of width {L!r}")
    e_plus = state_energy(state.with_width(L + h), units)
    e_minus = state_energy(state.with_width(L - h), units)
    return (e_minus - e_plus) / (2.0 * h)
