"""Time the compiled and pure-Python quadrature kernels side by side.

    python benchmarks/bench_quadrature.py --repeat 5 --sweep 200
"""

import argparse
import math
import time

from qwell_engine import _simpson_py, build_cycle
from qwell_engine.legs import leg_pressure, leg_pressure_law

try:
    from qwell_engine import _simpson_ext
except ImportError:
    _simpson_ext = None


def geometries(n):
    # deterministic spread of valid stirling/ericsson geometries
    out = []
    for k in range(n):
        short = 0.1 + 4.9 * ((k * 0.618033988749895) % 1.0)
        ratio = 0.01 + 0.48 * ((k * 0.414213562373095) % 1.0)
        name = ("stirling", "ericsson")[k % 2]
        long = short / ratio
        out.append((name, short, long) if name == "stirling" else (name, long, short))
    return out


def workload(kernel, cases, generic, rel_tol):
    total = 0.0
    for name, l1, l3 in cases:
        cycle = build_cycle(name, l1, l3)
        for leg in cycle.legs:
            a, b = sorted((leg.start.width, leg.end.width))
            if generic:
                f = lambda L, leg=leg: leg_pressure(leg, L, cycle.units)  # noqa: E731
                value, _, _ = kernel.adaptive_simpson(f, a, b, rel_tol, 1e-14, 50)
            else:
                law = leg_pressure_law(leg, cycle.units)
                value, _, _ = kernel.adaptive_simpson_power(law.coef, law.power, a, b, rel_tol, 1e-14, 50)
            total += value
    return total


def best_of(fn, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sweep", type=int, default=200, help="number of cycle geometries")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--rel-tol", type=float, default=1e-12)
    args = ap.parse_args()

    cases = geometries(args.sweep)
    kernels = [("python", _simpson_py)]
    if _simpson_ext is not None:
        kernels.append(("compiled", _simpson_ext))
    else:
        print("compiled kernel not built; timing the Python kernel only")

    print(f"{'integrand':<12}{'kernel':<10}{'seconds':>12}{'speedup':>10}")
    for label, generic in (("power-law", False), ("callable", True)):
        base = None
        results = {}
        for name, kernel in kernels:
            t, value = best_of(lambda: workload(kernel, cases, generic, args.rel_tol), args.repeat)
            results[name] = value
            base = base or t
            print(f"{label:<12}{name:<10}{t:>12.5f}{base / t:>9.1f}x")
        if len(results) == 2 and results["python"] != results["compiled"]:
            print(f"  warning: kernels disagree ({results['python']!r} vs {results['compiled']!r})")


if __name__ == "__main__":
    main()
