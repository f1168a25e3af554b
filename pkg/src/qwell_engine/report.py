"""Run configuration, P-L diagram sampling, and CSV/JSON rendering."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np

from .cycles import (
    CYCLE_NAMES,
    LEG_IDS,
    Cycle,
    CycleMetrics,
    build_cycle,
    cycle_metrics,
    efficiency_closed_form,
    quadrature_leg_work,
)
from .errors import ParameterError
from .legs import (
    ConstantN,
    leg_energy,
    leg_occupation,
    leg_pressure,
    leg_state,
    leg_work_closed_form,
)
from .oracle import QuadratureConfig, integrate
from .well import UnitSystem, state_pressure

__all__ = [
    "CSV_HEADER",
    "DiagramSample",
    "RunConfig",
    "cycle_samples",
    "render_csv",
    "render_json",
    "run_report",
    "sweep_geometries",
    "verify_cycle",
]

CSV_HEADER = "leg_id,L,P,E,a1_sq"


@dataclass(frozen=True)
class RunConfig:
    cycle_name: str
    l1: float
    l3: float
    units: str = "natural"
    hbar: float = 1.0
    mass: float = 1.0
    samples_per_leg: int = 128
    quad_tol: float = 1e-10
    threshold: float = 1e-9
    fmt: str = "json"

    def __post_init__(self):
        if self.cycle_name not in CYCLE_NAMES:
            raise ParameterError(f"unknown cycle {self.cycle_name!r}")
        if self.units not in ("natural", "explicit"):
            raise ParameterError(f"units must be 'natural' or 'explicit', got {self.units!r}")
        if self.units == "natural" and (self.hbar, self.mass) != (1.0, 1.0):
            raise ParameterError("natural units fix hbar = mass = 1; use --units explicit")
        if int(self.samples_per_leg) != self.samples_per_leg or self.samples_per_leg < 2:
            raise ParameterError(f"samples per leg must be an integer >= 2, got {self.samples_per_leg!r}")
        if not self.quad_tol > 0.0:
            raise ParameterError(f"quadrature tolerance must be positive, got {self.quad_tol!r}")
        if not self.threshold > 0.0:
            raise ParameterError(f"verification threshold must be positive, got {self.threshold!r}")
        if self.fmt not in ("json", "csv"):
            raise ParameterError(f"format must be 'json' or 'csv', got {self.fmt!r}")

    def unit_system(self) -> UnitSystem:
        try:
            return UnitSystem(self.hbar, self.mass)
        except ValueError as exc:
            raise ParameterError(str(exc)) from exc

    def cycle(self) -> Cycle:
        return build_cycle(self.cycle_name, self.l1, self.l3, self.unit_system())

    def as_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {"cycle": d.pop("cycle_name"), "format": d.pop("fmt"), **d}


@dataclass(frozen=True)
class DiagramSample:
    leg_id: str
    L: float
    P: float
    E: float
    a1_sq: float


def cycle_samples(cycle: Cycle, samples_per_leg: int) -> list[DiagramSample]:
    """Points uniform in width along every leg, vertices repeated at the joints."""
    units = cycle.units
    rows = []
    for leg_id, leg in zip(LEG_IDS, cycle.legs):
        for L in np.linspace(leg.start.width, leg.end.width, samples_per_leg):
            L = float(L)
            rows.append(
                DiagramSample(
                    leg_id,
                    L,
                    leg_pressure(leg, L, units),
                    leg_energy(leg, L, units),
                    leg_occupation(leg, L, units),
                )
            )
    return rows


def run_report(config: RunConfig) -> tuple[dict[str, Any], CycleMetrics]:
    cycle = config.cycle()
    metrics = cycle_metrics(cycle, config.quad_tol)
    report = {
        "config": config.as_dict(),
        "metrics": metrics.as_dict(),
        "samples": [asdict(s) for s in cycle_samples(cycle, config.samples_per_leg)],
    }
    return report, metrics


def render_json(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _g17(x: float) -> str:
    return format(x, ".17g")


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return _g17(value)
    if isinstance(value, (list, tuple)):
        return ";".join(_fmt(v) for v in value)
    return str(value)


def render_csv(report: dict[str, Any]) -> str:
    lines = ["# metrics:"]
    for key, value in report["config"].items():
        lines.append(f"# config.{key}: {_fmt(value)}")
    for key, value in report["metrics"].items():
        lines.append(f"# {key}: {_fmt(value)}")
    lines.append(CSV_HEADER)
    for s in report["samples"]:
        lines.append(",".join([s["leg_id"], _g17(s["L"]), _g17(s["P"]), _g17(s["E"]), _g17(s["a1_sq"])]))
    return "\n".join(lines) + "\n"


def _rel(x: float, ref: float) -> float:
    if ref == 0.0:
        return abs(x)
    return abs(x - ref) / abs(ref)


def verify_cycle(cycle: Cycle, quad_tol: float = 1e-10) -> dict[str, float]:
    """Residuals of every closed form against the quadrature oracle.

    Two quadrature routes are checked: the leg's pressure law, and the
    pressure of the full occupation state along the leg.
    """
    units = cycle.units
    cfg = QuadratureConfig(rel_tol=quad_tol)
    legs = cycle.legs
    closed = [leg_work_closed_form(leg, units) for leg in legs]
    quad = [quadrature_leg_work(leg, units, cfg) for leg in legs]
    via_state = []
    for leg in legs:

        def p_state(L, leg=leg):
            return state_pressure(leg_state(leg, L, units), units)

        via_state.append(integrate(p_state, leg.start.width, leg.end.width, cfg))

    hot = legs[0]
    short, long = hot.start.width, legs[2].start.width
    scale = units.energy_scale
    ln2 = math.log(2.0)
    q_hot = quad[0]
    w_quad = math.fsum(quad)
    n_legs = [w for leg, w in zip(legs, quad) if isinstance(leg.kind, ConstantN)]
    metrics = cycle_metrics(cycle, quad_tol)

    ratio = short / long
    return {
        "per_leg_work": max(_rel(q, c) for q, c in zip(quad, closed)),
        "per_leg_work_state_route": max(_rel(q, c) for q, c in zip(via_state, closed)),
        "heat_in": _rel(q_hot, scale / (short * short) * ln2),
        "total_work": _rel(w_quad, scale * (1.0 / (short * short) - 4.0 / (long * long)) * ln2),
        "efficiency": _rel(w_quad / q_hot, efficiency_closed_form(cycle.name, ratio)),
        "efficiency_energy_ratio": _rel(metrics.efficiency, 1.0 - metrics.e_cold / metrics.e_hot),
        "constant_n_cancellation": abs(math.fsum(n_legs)) / max(abs(w) for w in n_legs),
        "oracle_residual": metrics.oracle_residual,
    }


def sweep_geometries(count: int, seed: int, cycle_name: str | None = None) -> list[tuple[str, float, float]]:
    """Random valid (cycle, L1, L3) triples, reproducible for a given seed."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        name = cycle_name or CYCLE_NAMES[k % 2]
        short = float(10.0 ** rng.uniform(-1.0, 0.5))
        ratio = float(rng.uniform(0.02, 0.48))
        long = short / ratio
        if name == "stirling":
            out.append((name, short, long))
        else:
            out.append((name, long, short))
    return out
