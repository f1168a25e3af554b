# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled adaptive Simpson kernels; mirrors ``_simpson_py`` operation for operation."""

from libc.math cimport fabs, pow


cdef struct Acc:
    double err
    bint ok


cdef inline double _fmax(double x, double y) nogil:
    return x if x >= y else y


cdef double _panel_obj(object f, double a, double fa, double m, double fm,
                       double b, double fb, double whole, double rel_tol,
                       double abs_tol, int depth, Acc* acc) except? -1.0:
    cdef double lm = 0.5 * (a + m)
    cdef double rm = 0.5 * (m + b)
    cdef double flm = f(lm)
    cdef double frm = f(rm)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double both = left + right
    cdef double delta = both - whole
    cdef double tol = _fmax(rel_tol * fabs(both), abs_tol)
    cdef double half
    if fabs(delta) <= 15.0 * tol:
        return both + delta / 15.0
    if depth <= 0:
        acc.err += fabs(delta)
        acc.ok = False
        return both + delta / 15.0
    half = 0.5 * abs_tol
    return (_panel_obj(f, a, fa, lm, flm, m, fm, left, rel_tol, half, depth - 1, acc)
            + _panel_obj(f, m, fm, rm, frm, b, fb, right, rel_tol, half, depth - 1, acc))


cdef inline double _pw(double coef, double power, double x) nogil:
    return coef * pow(x, -power)


cdef double _panel_pow(double coef, double power, double a, double fa, double m,
                       double fm, double b, double fb, double whole, double rel_tol,
                       double abs_tol, int depth, Acc* acc) nogil:
    cdef double lm = 0.5 * (a + m)
    cdef double rm = 0.5 * (m + b)
    cdef double flm = _pw(coef, power, lm)
    cdef double frm = _pw(coef, power, rm)
    cdef double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    cdef double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    cdef double both = left + right
    cdef double delta = both - whole
    cdef double tol = _fmax(rel_tol * fabs(both), abs_tol)
    cdef double half
    if fabs(delta) <= 15.0 * tol:
        return both + delta / 15.0
    if depth <= 0:
        acc.err += fabs(delta)
        acc.ok = False
        return both + delta / 15.0
    half = 0.5 * abs_tol
    return (_panel_pow(coef, power, a, fa, lm, flm, m, fm, left, rel_tol, half, depth - 1, acc)
            + _panel_pow(coef, power, m, fm, rm, frm, b, fb, right, rel_tol, half, depth - 1, acc))


def adaptive_simpson(f, double a, double b, double rel_tol, double abs_tol, int max_depth):
    cdef Acc acc
    acc.err = 0.0
    acc.ok = True
    cdef double fa = f(a)
    cdef double fb = f(b)
    cdef double m = 0.5 * (a + b)
    cdef double fm = f(m)
    cdef double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    cdef double value = _panel_obj(f, a, fa, m, fm, b, fb, whole, rel_tol, abs_tol,
                                   max_depth - 1, &acc)
    return value, acc.err, bool(acc.ok)


def adaptive_simpson_power(double coef, double power, double a, double b,
                           double rel_tol, double abs_tol, int max_depth):
    cdef Acc acc
    cdef double fa, fb, m, fm, whole, value
    acc.err = 0.0
    acc.ok = True
    with nogil:
        fa = _pw(coef, power, a)
        fb = _pw(coef, power, b)
        m = 0.5 * (a + b)
        fm = _pw(coef, power, m)
        whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
        value = _panel_pow(coef, power, a, fa, m, fm, b, fb, whole, rel_tol, abs_tol,
                           max_depth - 1, &acc)
    return value, acc.err, bool(acc.ok)
