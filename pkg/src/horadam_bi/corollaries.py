"""Closed-form special cases of the three class bounds.

Each formula is written out by hand and does not call the generic engine in
:mod:`horadam_bi.bounds`; the two are compared in the test suite and by
``horadam-bi reduce``. Chebyshev cases take ``t`` in ``(0, 1)``.

The ``l_t`` entry uses ``(2 - alpha)^2 - 2 (alpha^2 - 5 alpha + 4) t^2``,
which is what the general ``L`` bound gives at ``(a, b, p, q) = (1, 2, 2, -1)``.
The variant with the factor 2 dropped is kept as ``l_t_printed``; it
contradicts the ``k_t`` case at ``alpha = 0`` and is not a valid bound.
"""
from __future__ import annotations

import math

from .bounds import BOUNDARY_TOL, VACUOUS_D, BoundReport, Branch
from .classes import ClassKind, ClassSpec
from .horadam import CHEBYSHEV_SECOND, FIBONACCI, HoradamParams


def _assemble(bracket, a2_num, a3, inner, outer_num, thr_den, nu) -> BoundReport:
    """``outer_num * |nu - 1| / |bracket|`` beyond ``|bracket| / thr_den``."""
    dist = abs(nu - 1)
    if abs(bracket) <= VACUOUS_D:
        a2 = math.inf
        threshold = 0.0
        fs, branch = (inner, Branch.INNER) if dist == 0 else (math.inf, Branch.OUTER)
    else:
        a2 = a2_num / math.sqrt(abs(bracket))
        threshold = abs(bracket) / thr_den if thr_den else math.inf
        if math.isclose(dist, threshold, rel_tol=BOUNDARY_TOL, abs_tol=BOUNDARY_TOL):
            fs, branch = inner, Branch.BOUNDARY
        elif dist < threshold:
            fs, branch = inner, Branch.INNER
        else:
            fs, branch = outer_num * dist / abs(bracket), Branch.OUTER
    return BoundReport(a2, a3, fs, branch, float(nu), bracket, threshold)


def cor_sstar_x(params: HoradamParams, x: float, nu: float = 1.0) -> BoundReport:
    a, b, p, q = params.as_tuple()
    bx = abs(b * x)
    br = (b - p) * b * x * x - q * a
    return _assemble(br, bx * math.sqrt(bx), bx / 2 + b * b * x * x,
                     bx / 2, bx ** 3, 2 * b * b * x * x, nu)


def cor_sstar_t(alpha: float, t: float, nu: float = 1.0) -> BoundReport:
    br = (1 + 2 * alpha) ** 2 - 16 * alpha ** 2 * t ** 2
    return _assemble(br, 2 * t * math.sqrt(2 * t),
                     t / (1 + 3 * alpha) + 4 * t * t / (1 + 2 * alpha) ** 2,
                     2 * t / (2 + 6 * alpha), 8 * t ** 3, 8 * t * t * (1 + 3 * alpha), nu)


def cor_k_x(params: HoradamParams, x: float, nu: float = 1.0) -> BoundReport:
    a, b, p, q = params.as_tuple()
    bx = abs(b * x)
    br = (2 * b - 4 * p) * b * x * x - 4 * q * a
    return _assemble(br, bx * math.sqrt(bx), bx / 6 + b * b * x * x / 4,
                     bx / 6, bx ** 3, 6 * b * b * x * x, nu)


def cor_mocanu_t(alpha: float, t: float, nu: float = 1.0) -> BoundReport:
    br = (1 + alpha) ** 2 - 4 * alpha * (1 + alpha) * t ** 2
    return _assemble(br, 2 * t * math.sqrt(2 * t),
                     t / (1 + 2 * alpha) + 4 * t * t / (1 + alpha) ** 2,
                     t / (1 + 2 * alpha), 8 * t ** 3, 8 * t * t * (1 + 2 * alpha), nu)


def cor_k_t(t: float, nu: float = 1.0) -> BoundReport:
    br = 1 - 2 * t * t
    return _assemble(br, t * math.sqrt(2 * t), t / 3 + t * t,
                     t / 3, 2 * t ** 3, 6 * t * t, nu)


def _cor_l_t(alpha: float, t: float, nu: float, t2_weight: float) -> BoundReport:
    br = (2 - alpha) ** 2 - t2_weight * (alpha ** 2 - 5 * alpha + 4) * t ** 2
    return _assemble(br, 2 * t * math.sqrt(2 * t),
                     t / (3 - 2 * alpha) + 4 * t * t / (2 - alpha) ** 2,
                     t / (3 - 2 * alpha), 8 * t ** 3, 8 * t * t * (3 - 2 * alpha), nu)


def cor_l_t(alpha: float, t: float, nu: float = 1.0) -> BoundReport:
    return _cor_l_t(alpha, t, nu, 2.0)


def cor_l_t_printed(alpha: float, t: float, nu: float = 1.0) -> BoundReport:
    return _cor_l_t(alpha, t, nu, 1.0)


# name -> (description, takes general (params, x) rather than (alpha, t))
COROLLARIES = {
    "sstar_x": "SStar alpha=0, general (a,b,p,q)",
    "sstar_t": "SStar, Chebyshev U",
    "k_x": "Mocanu alpha=1, general (a,b,p,q)",
    "mocanu_t": "Mocanu, Chebyshev U",
    "k_t": "Mocanu alpha=1, Chebyshev U",
    "l_t": "AlphaBlend, Chebyshev U",
}


def corollary_bounds(name: str, *, nu: float = 1.0, params: HoradamParams | None = None,
                     x: float | None = None, alpha: float | None = None,
                     t: float | None = None) -> BoundReport:
    if name == "sstar_x":
        return cor_sstar_x(params or FIBONACCI, x, nu)
    if name == "k_x":
        return cor_k_x(params or FIBONACCI, x, nu)
    if name == "sstar_t":
        return cor_sstar_t(alpha, t, nu)
    if name == "mocanu_t":
        return cor_mocanu_t(alpha, t, nu)
    if name == "k_t":
        return cor_k_t(t, nu)
    if name == "l_t":
        return cor_l_t(alpha, t, nu)
    if name == "l_t_printed":
        return cor_l_t_printed(alpha, t, nu)
    raise KeyError(f"unknown corollary {name!r}; known: {', '.join(COROLLARIES)}")


def corollary_spec(name: str, *, params: HoradamParams | None = None, x: float | None = None,
                   alpha: float | None = None, t: float | None = None) -> ClassSpec:
    """The engine input that the named corollary specialises."""
    if name == "sstar_x":
        return ClassSpec(ClassKind.SSTAR, 0.0, params or FIBONACCI, x)
    if name == "k_x":
        return ClassSpec(ClassKind.MOCANU, 1.0, params or FIBONACCI, x)
    if name == "sstar_t":
        return ClassSpec(ClassKind.SSTAR, alpha, CHEBYSHEV_SECOND, t)
    if name == "mocanu_t":
        return ClassSpec(ClassKind.MOCANU, alpha, CHEBYSHEV_SECOND, t)
    if name == "k_t":
        return ClassSpec(ClassKind.MOCANU, 1.0, CHEBYSHEV_SECOND, t)
    if name in ("l_t", "l_t_printed"):
        return ClassSpec(ClassKind.ALPHA_BLEND, alpha, CHEBYSHEV_SECOND, t)
    raise KeyError(f"unknown corollary {name!r}")
