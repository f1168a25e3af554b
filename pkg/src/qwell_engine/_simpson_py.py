"""Pure-Python adaptive Simpson kernels.

Reference implementation of the compiled ``_simpson_ext`` module. The two
perform the same floating-point operations in the same order, so they agree
bit for bit. Both return ``(value, error_bound, converged)``.
"""

import math


def _panel(f, a, fa, m, fm, b, fb, whole, rel_tol, abs_tol, depth, acc):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    both = left + right
    delta = both - whole
    tol = max(rel_tol * abs(both), abs_tol)
    if abs(delta) <= 15.0 * tol:
        return both + delta / 15.0
    if depth <= 0:
        acc[0] += abs(delta)
        acc[1] = False
        return both + delta / 15.0
    half = 0.5 * abs_tol
    return _panel(f, a, fa, lm, flm, m, fm, left, rel_tol, half, depth - 1, acc) + _panel(
        f, m, fm, rm, frm, b, fb, right, rel_tol, half, depth - 1, acc
    )


def adaptive_simpson(f, a, b, rel_tol, abs_tol, max_depth):
    """Integrate ``f`` over ``[a, b]`` with ``a < b``."""
    fa = f(a)
    fb = f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    acc = [0.0, True]
    value = _panel(f, a, fa, m, fm, b, fb, whole, rel_tol, abs_tol, max_depth - 1, acc)
    return value, acc[0], acc[1]


def adaptive_simpson_power(coef, power, a, b, rel_tol, abs_tol, max_depth):
    """Integrate ``coef * x**(-power)`` over ``[a, b]`` with ``0 < a < b``."""
    return adaptive_simpson(
        lambda x: coef * math.pow(x, -power), a, b, rel_tol, abs_tol, max_depth
    )
