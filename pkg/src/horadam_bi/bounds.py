"""Coefficient and Fekete-Szegő bounds from a :class:`CoefficientSystem`.

Adding and subtracting the two second-order equations gives

    a2^2 = h2^3 (u2 + v2) / (2 D),          D = (K h2^2 - 2 c1^2 h3) / 2
    a3   = h2 (u2 - v2) / (2 e1) + a2^2,

from which every bound below follows with ``|u_k|, |v_k| <= 1``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

from .classes import ClassSpec, coefficient_system, schwarz_weights

VACUOUS_D = 1e-13
BOUNDARY_TOL = 1e-12


class Branch(enum.Enum):
    INNER = "Inner"
    OUTER = "Outer"
    BOUNDARY = "Boundary"


@dataclass(frozen=True)
class BoundReport:
    a2_bound: float
    a3_bound: float
    fs_bound: float
    fs_branch: Branch
    nu: float
    denom: float
    threshold: float
    degenerate: bool = False

    @property
    def vacuous(self) -> bool:
        return math.isinf(self.a2_bound) or math.isinf(self.fs_bound)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["fs_branch"] = self.fs_branch.value
        return d


def denom(spec: ClassSpec) -> float:
    """Signed denominator ``D``; ``|a2|^2 <= |h2|^3 / |D|``."""
    system = coefficient_system(spec)
    h2, h3 = schwarz_weights(spec.horadam, spec.x)
    return (system.K * h2 * h2 - 2 * system.c1 ** 2 * h3) / 2


def _is_vacuous(d: float) -> bool:
    return abs(d) <= VACUOUS_D


def bound_a2(spec: ClassSpec) -> float:
    """Upper bound on ``|a2|``; ``math.inf`` when ``D`` vanishes."""
    d = denom(spec)
    if _is_vacuous(d):
        return math.inf
    h2 = abs(spec.horadam.b * spec.x)
    return h2 * math.sqrt(h2) / math.sqrt(abs(d))


def bound_a3(spec: ClassSpec) -> float:
    system = coefficient_system(spec)
    h2 = abs(spec.horadam.b * spec.x)
    return h2 / system.e1 + h2 * h2 / system.c1 ** 2


def fs_threshold(spec: ClassSpec) -> float:
    """Value of ``|nu - 1|`` at which the Fekete-Szegő bound switches branch."""
    d = denom(spec)
    if _is_vacuous(d):
        return 0.0
    h2 = spec.horadam.b * spec.x
    if h2 == 0:
        return math.inf
    return abs(d) / (h2 * h2 * coefficient_system(spec).e1)


def fekete_szego(spec: ClassSpec, nu: float) -> tuple[float, Branch]:
    """Bound on ``|a3 - nu a2^2|`` and the branch that produced it."""
    system = coefficient_system(spec)
    h2 = abs(spec.horadam.b * spec.x)
    d = denom(spec)
    dist = abs(nu - 1)
    inner = h2 / system.e1
    if _is_vacuous(d):
        if dist == 0:
            return inner, Branch.INNER
        return math.inf, Branch.OUTER
    threshold = fs_threshold(spec)
    if math.isclose(dist, threshold, rel_tol=BOUNDARY_TOL, abs_tol=BOUNDARY_TOL):
        return inner, Branch.BOUNDARY
    if dist < threshold:
        return inner, Branch.INNER
    return h2 ** 3 * dist / abs(d), Branch.OUTER


def omega(spec: ClassSpec, nu: float) -> float:
    """Branch selector ``(1 - nu) h2^2 / (2 D)``."""
    h2 = spec.horadam.b * spec.x
    return (1 - nu) * h2 * h2 / (2 * denom(spec))


def bound_report(spec: ClassSpec, nu: float = 1.0) -> BoundReport:
    fs, branch = fekete_szego(spec, nu)
    return BoundReport(
        a2_bound=bound_a2(spec),
        a3_bound=bound_a3(spec),
        fs_bound=fs,
        fs_branch=branch,
        nu=float(nu),
        denom=denom(spec),
        threshold=fs_threshold(spec),
        degenerate=spec.horadam.b * spec.x == 0,
    )


def branch_gap(spec: ClassSpec) -> float:
    """Relative gap between the inner and outer formulas at ``|nu - 1| = threshold``."""
    d = denom(spec)
    h2 = abs(spec.horadam.b * spec.x)
    if _is_vacuous(d) or h2 == 0:
        return 0.0
    inner = h2 / coefficient_system(spec).e1
    outer = h2 ** 3 * fs_threshold(spec) / abs(d)
    return abs(inner - outer) / max(inner, outer)
