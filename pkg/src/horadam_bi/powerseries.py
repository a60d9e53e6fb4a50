"""Truncated formal power series with complex coefficients.

A :class:`TruncatedSeries` of order N stores ``c_0 .. c_N``; terms beyond
``z^N`` are unknown, not zero. Binary operations require equal orders, so
callers align operands explicitly with :meth:`TruncatedSeries.truncate`.
"""
from __future__ import annotations

import numbers

import numpy as np

ZERO_TOL = 1e-13
UNIT_TOL = 1e-12


class SeriesError(ValueError):
    """Raised when a series operation is used outside its domain."""


class OrderMismatchError(SeriesError):
    pass


class TruncatedSeries:
    __slots__ = ("_c",)
    __array_priority__ = 100

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            raise SeriesError("a truncated series needs at least one coefficient")
        if not np.all(np.isfinite(c)):
            raise SeriesError("series coefficients must be finite")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def from_coeffs(cls, coeffs, order: int) -> TruncatedSeries:
        """Pad (with zeros) or cut ``coeffs`` to exactly ``order + 1`` entries."""
        c = np.zeros(order + 1, dtype=complex)
        head = np.asarray(coeffs, dtype=complex)[: order + 1]
        c[: head.size] = head
        return cls(c)

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series ``z``."""
        return cls.from_coeffs([0.0, 1.0], order)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self):
        return self._c.size

    def __getitem__(self, k):
        return self._c[k]

    def __repr__(self):
        return f"TruncatedSeries({self._c.tolist()!r})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise SeriesError(f"cannot raise order {self.order} to {order}: higher terms are unknown")
        return TruncatedSeries(self._c[: order + 1])

    def allclose(self, other: TruncatedSeries, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        return self.order == other.order and bool(np.allclose(self._c, other._c, rtol=rtol, atol=atol))

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, numbers.Number):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(self._c + other._c)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(self._c - other._c)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return TruncatedSeries(other._c - self._c)

    def __neg__(self):
        return TruncatedSeries(-self._c)

    def scale(self, factor) -> TruncatedSeries:
        return TruncatedSeries(self._c * complex(factor))

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.order + 1
        return TruncatedSeries(np.convolve(self._c, other._c)[:n])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return self.scale(1.0 / complex(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = other._c
        if abs(t[0]) <= ZERO_TOL:
            raise ZeroDivisionError("series division by a series with zero constant term")
        s = self._c
        u = np.zeros_like(s)
        for k in range(s.size):
            u[k] = (s[k] - np.dot(u[:k], t[k:0:-1])) / t[0]
        return TruncatedSeries(u)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral) or n < 0:
            return real_power(self, n)
        result = TruncatedSeries.constant(1.0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> TruncatedSeries:
        """Term-wise derivative; the result has order ``N - 1``."""
        if self.order == 0:
            return TruncatedSeries([0.0])
        k = np.arange(1, self.order + 1)
        return TruncatedSeries(self._c[1:] * k)

    def integral(self) -> TruncatedSeries:
        """Antiderivative with zero constant term; the result has order ``N + 1``."""
        k = np.arange(1, self.order + 2)
        return TruncatedSeries(np.concatenate(([0.0], self._c / k)))

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by ``z**k``; the order grows by ``k`` since no information is lost."""
        return TruncatedSeries(np.concatenate((np.zeros(k, dtype=complex), self._c)))

    def unshift(self, k: int = 1) -> TruncatedSeries:
        """Divide by ``z**k``; the first ``k`` coefficients must vanish."""
        if np.any(np.abs(self._c[:k]) > ZERO_TOL):
            raise SeriesError(f"series is not divisible by z**{k}")
        return TruncatedSeries(self._c[k:])

    def __call__(self, value):
        """Evaluate the truncated polynomial at a number or compose with a series."""
        if isinstance(value, TruncatedSeries):
            return compose(self, value)
        return np.polynomial.polynomial.polyval(value, self._c)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` by Horner's scheme in the series ring."""
    if outer.order != inner.order:
        raise OrderMismatchError(f"orders differ: {outer.order} vs {inner.order}")
    if abs(inner[0]) > ZERO_TOL:
        raise SeriesError("inner series of a composition must have zero constant term")
    acc = TruncatedSeries.constant(outer[-1], outer.order)
    for c in outer.coeffs[-2::-1]:
        acc = acc * inner + c
    return acc


def log1(s: TruncatedSeries) -> TruncatedSeries:
    """Series logarithm of ``s`` with ``s(0) = 1``: integrate ``s'/s``."""
    if abs(s[0] - 1) > UNIT_TOL:
        raise SeriesError("log1 needs a series with constant term 1")
    if s.order == 0:
        return TruncatedSeries([0.0])
    return (s.derivative() / s.truncate(s.order - 1)).integral()


def exp0(s: TruncatedSeries) -> TruncatedSeries:
    """Series exponential of ``s`` with ``s(0) = 0``.

    Uses ``e' = s' e``, i.e. ``k e_k = sum_{j=1..k} j s_j e_{k-j}``.
    """
    if abs(s[0]) > UNIT_TOL:
        raise SeriesError("exp0 needs a series with zero constant term")
    c = s.coeffs
    e = np.zeros_like(c)
    e[0] = 1.0
    js = np.arange(c.size) * c
    for k in range(1, c.size):
        e[k] = np.dot(js[1 : k + 1], e[k - 1 :: -1][:k]) / k
    return TruncatedSeries(e)


def real_power(s: TruncatedSeries, alpha: float) -> TruncatedSeries:
    """``s**alpha`` for ``s(0) = 1``, as ``exp(alpha * log s)``.

    Small nonnegative integer exponents go through repeated multiplication.
    """
    if abs(s[0] - 1) > UNIT_TOL:
        raise SeriesError("real_power needs a series with constant term 1")
    if float(alpha).is_integer() and 0 <= alpha <= 16:
        return s ** int(alpha)
    return exp0(log1(s).scale(alpha))


def revert(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of ``s = z + s_2 z^2 + ...``.

    Coefficients are fixed one at a time: with ``g_k`` still zero, the
    ``z^k`` coefficient of ``g(s(z))`` is exactly ``-g_k``'s required value.
    """
    if s.order < 1 or abs(s[0]) > UNIT_TOL or abs(s[1] - 1) > UNIT_TOL:
        raise SeriesError("revert needs a series of the form z + O(z^2)")
    g = np.zeros(s.order + 1, dtype=complex)
    g[1] = 1.0
    for k in range(2, s.order + 1):
        g[k] = -compose(TruncatedSeries(g), s)[k]
    return TruncatedSeries(g)
