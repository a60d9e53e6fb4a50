"""The three subordination classes and their order-two coefficient systems.

Every class functional ``F[f]`` is subordinate to ``Pi(x, z) + 1 - a``. Writing
``F[f] = 1 + h2 u1 z + (h2 u2 + h3 u1^2) z^2 + ...`` and the same for the
inverse ``g = f^{-1}`` with Schwarz coefficients ``v1, v2`` gives four
equations, which share one shape across the classes::

    c1 a2                 = h2 u1
    e1 a3 + e2 a2^2       = h2 u2 + h3 u1^2
   -c1 a2                 = h2 v1
    f1 a2^2 + f2 a3       = h2 v2 + h3 v1^2

:class:`CoefficientSystem` stores ``(c1, e1, e2, f1, f2)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .horadam import HoradamParams
from .powerseries import TruncatedSeries, real_power, revert

DEGENERATE_H2 = 1e-12


class ClassKind(enum.Enum):
    SSTAR = "sstar"            # z f'/f + alpha z^2 f''/f
    MOCANU = "mocanu"          # (1 - alpha) z f'/f + alpha (1 + z f''/f')
    ALPHA_BLEND = "alphablend"  # (z f'/f)^alpha (1 + z f''/f')^(1 - alpha)


class ClassRangeError(ValueError):
    """alpha lies outside the range on which the class is defined."""


class DegenerateParameterError(ValueError):
    """``h2(x) = b x`` vanishes, so the subordination carries no information."""


def alpha_range(kind: ClassKind) -> tuple[float, float]:
    if kind is ClassKind.SSTAR:
        return (0.0, math.inf)
    return (0.0, 1.0)


@dataclass(frozen=True)
class ClassSpec:
    kind: ClassKind
    alpha: float
    horadam: HoradamParams
    x: float

    def __post_init__(self):
        if isinstance(self.kind, str):
            object.__setattr__(self, "kind", ClassKind(self.kind))
        lo, hi = alpha_range(self.kind)
        if not (lo <= self.alpha <= hi) or math.isnan(self.alpha):
            raise ClassRangeError(
                f"alpha={self.alpha!r} outside [{lo}, {hi}] for class {self.kind.value}"
            )
        if not math.isfinite(self.x):
            raise ValueError(f"x={self.x!r} is not finite")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "alpha": self.alpha,
            "horadam": dict(zip("abpq", self.horadam.as_tuple())),
            "x": self.x,
        }


@dataclass(frozen=True)
class FunctionCoeffs:
    """Second and third Taylor coefficients of ``f(z) = z + a2 z^2 + a3 z^3``."""

    a2: complex
    a3: complex

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs([0.0, 1.0, self.a2, self.a3], order)


@dataclass(frozen=True)
class CoefficientSystem:
    c1: float
    e1: float
    e2: float
    f1: float
    f2: float

    @property
    def K(self) -> float:
        """Coefficient of ``a2^2`` in the summed equation."""
        return self.e2 + self.f1

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.c1, self.e1, self.e2, self.f1, self.f2)


def schwarz_weights(params: HoradamParams, x: float) -> tuple[float, float]:
    """``(h2(x), h3(x)) = (b x, p b x^2 + q a)``.

    Every bound and every proof equation goes through these two values.
    """
    h2 = params.b * x
    h3 = params.p * params.b * x * x + params.q * params.a
    return h2, h3


def coefficient_system(spec: ClassSpec) -> CoefficientSystem:
    al = spec.alpha
    lo, hi = alpha_range(spec.kind)
    if not lo <= al <= hi:
        raise ClassRangeError(f"alpha={al!r} outside [{lo}, {hi}]")
    if spec.kind is ClassKind.SSTAR:
        return CoefficientSystem(1 + 2 * al, 2 * (1 + 3 * al), -(1 + 2 * al),
                                 3 + 10 * al, -2 * (1 + 3 * al))
    if spec.kind is ClassKind.MOCANU:
        return CoefficientSystem(1 + al, 2 * (1 + 2 * al), -(1 + 3 * al),
                                 3 + 5 * al, -2 * (1 + 2 * al))
    return CoefficientSystem(
        2 - al,
        2 * (3 - 2 * al),
        ((al - 2) ** 2 - 3 * (4 - 3 * al)) / 2,
        8 * (1 - al) + al * (al + 5) / 2,
        -2 * (3 - 2 * al),
    )


def _functional(kind: ClassKind, alpha: float, f: TruncatedSeries) -> TruncatedSeries:
    # f has order N + 1; every piece below has order N.
    fz = f.unshift(1)
    fp = f.derivative()
    zfpp = fp.derivative().shift(1)
    starlike = fp / fz
    if kind is ClassKind.SSTAR:
        return starlike + alpha * (zfpp / fz)
    convex = 1 + zfpp / fp
    if kind is ClassKind.MOCANU:
        return (1 - alpha) * starlike + alpha * convex
    return real_power(starlike, alpha) * real_power(convex, 1 - alpha)


def functional_series(spec: ClassSpec, f: FunctionCoeffs, order: int = 8) -> TruncatedSeries:
    """Class functional of ``f(z) = z + a2 z^2 + a3 z^3`` to order ``order``."""
    if order < 3:
        raise ValueError("functional_series needs order >= 3")
    return _functional(spec.kind, spec.alpha, f.series(order + 1))


def inverse_functional_series(spec: ClassSpec, f: FunctionCoeffs, order: int = 8) -> TruncatedSeries:
    """Class functional of ``g = f^{-1}``, with ``g`` obtained by series reversion."""
    if order < 3:
        raise ValueError("inverse_functional_series needs order >= 3")
    g = revert(f.series(order + 1))
    return _functional(spec.kind, spec.alpha, g)


def inverse_coeffs(f: FunctionCoeffs) -> FunctionCoeffs:
    """Second and third coefficients of ``f^{-1}``: ``(-a2, 2 a2^2 - a3)``."""
    return FunctionCoeffs(-f.a2, 2 * f.a2 * f.a2 - f.a3)


def extract_schwarz(series: TruncatedSeries, params: HoradamParams, x: float) -> tuple[complex, complex]:
    """Recover ``(u1, u2)`` from ``1 + h2 u1 z + (h2 u2 + h3 u1^2) z^2 + ...``."""
    h2, h3 = schwarz_weights(params, x)
    if abs(h2) <= DEGENERATE_H2:
        raise DegenerateParameterError(f"h2(x) = b x = {h2!r} is too small")
    if abs(series[0] - 1) > 1e-10:
        raise ValueError(f"functional series must start with 1, got {series[0]!r}")
    u1 = complex(series[1]) / h2
    u2 = (complex(series[2]) - h3 * u1 * u1) / h2
    return u1, u2
