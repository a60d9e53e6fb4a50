"""Horadam polynomials.

The family is indexed from n = 1 with ``h_1 = a`` and ``h_2 = b*x``, so the
classical degree-n polynomial of a named family sits at index ``n + 1``
(for instance ``h_3`` of the Chebyshev-U family is ``U_2(x) = 4x^2 - 1``).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .powerseries import TruncatedSeries


@dataclass(frozen=True)
class HoradamParams:
    """Real quadruple ``(a, b, p, q)`` defining a Horadam family."""

    a: float
    b: float
    p: float
    q: float

    def __post_init__(self):
        for name in ("a", "b", "p", "q"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"Horadam parameter {name}={value!r} is not finite")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.p, self.q)


class PolyFamily(enum.Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    PELL = "pell"
    PELL_LUCAS = "pell-lucas"
    CHEBYSHEV_FIRST = "chebyshev1"
    CHEBYSHEV_SECOND = "chebyshev2"


_FAMILY_PARAMS = {
    PolyFamily.FIBONACCI: HoradamParams(1, 1, 1, 1),
    PolyFamily.LUCAS: HoradamParams(2, 1, 1, 1),
    PolyFamily.PELL: HoradamParams(1, 2, 2, 1),
    PolyFamily.PELL_LUCAS: HoradamParams(2, 2, 2, 1),
    PolyFamily.CHEBYSHEV_FIRST: HoradamParams(1, 1, 2, -1),
    PolyFamily.CHEBYSHEV_SECOND: HoradamParams(1, 2, 2, -1),
}

FIBONACCI = _FAMILY_PARAMS[PolyFamily.FIBONACCI]
CHEBYSHEV_SECOND = _FAMILY_PARAMS[PolyFamily.CHEBYSHEV_SECOND]


def family_params(family: PolyFamily | HoradamParams | str) -> HoradamParams:
    """Return the ``(a, b, p, q)`` quadruple of a named family.

    A :class:`HoradamParams` instance (a custom family) is passed through
    unchanged; strings are looked up by the :class:`PolyFamily` value.
    """
    if isinstance(family, HoradamParams):
        return family
    if isinstance(family, str):
        try:
            family = PolyFamily(family.lower())
        except ValueError:
            known = ", ".join(f.value for f in PolyFamily)
            raise ValueError(f"unknown family {family!r} (known: {known})") from None
    return _FAMILY_PARAMS[family]


def _check_index(n: int, name: str = "n") -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"{name} must be a positive integer, got {n!r}")


def horadam_sequence(params: HoradamParams, n_max: int, x: float) -> list[float]:
    """Return ``[h_1(x), ..., h_{n_max}(x)]`` by the three-term recurrence."""
    _check_index(n_max, "n_max")
    a, b, p, q = params.as_tuple()
    seq = [float(a)]
    if n_max >= 2:
        seq.append(b * x)
    for _ in range(2, n_max):
        seq.append(p * x * seq[-1] + q * seq[-2])
    return seq


def horadam_eval(params: HoradamParams, n: int, x: float) -> float:
    """Evaluate ``h_n(x)`` for ``n >= 1``."""
    _check_index(n)
    a, b, p, q = params.as_tuple()
    if n == 1:
        return float(a)
    prev, cur = float(a), b * x
    for _ in range(2, n):
        prev, cur = cur, p * x * cur + q * prev
    return cur


def generating_series(params: HoradamParams, x: float, order: int) -> TruncatedSeries:
    """Taylor expansion in z of ``(a + (b - a p) x z) / (1 - p x z - q z^2)``."""
    a, b, p, q = params.as_tuple()
    num = TruncatedSeries.from_coeffs([a, (b - a * p) * x], order)
    den = TruncatedSeries.from_coeffs([1.0, -p * x, -q], order)
    return num / den


def gf_coefficients(params: HoradamParams, x: float, n_max: int) -> list[float]:
    """First ``n_max`` Taylor coefficients of the generating function.

    Coefficient ``k`` (0-based) equals ``h_{k+1}(x)``; this goes through
    series division and never touches the recurrence, so it serves as an
    independent check on :func:`horadam_sequence`.
    """
    _check_index(n_max, "n_max")
    series = generating_series(params, x, n_max - 1)
    return [float(c.real) for c in series.coeffs]


def chebyshev_u_trig(n: int, phi: float) -> float:
    """``U_n(cos phi)`` from ``sin((n+1) phi) / sin(phi)``.

    At multiples of pi the removable singularity is replaced by its limit,
    ``n + 1`` at even multiples and ``(-1)**n (n + 1)`` at odd ones.
    """
    if int(n) != n or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    s = math.sin(phi)
    if abs(s) <= 1e-12:
        k = round(phi / math.pi)
        return float((n + 1) * (-1) ** (n * (k % 2)))
    return math.sin((n + 1) * phi) / s
