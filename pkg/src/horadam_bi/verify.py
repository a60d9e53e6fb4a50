"""Monte-Carlo certification of the coefficient bounds.

Candidates are built exactly as in the derivation of the bounds: sample
``u1, u2`` in the closed unit disk, set ``v1 = -u1``, solve the class
equations for ``a2``, ``a3`` and then ``v2``, and keep the tuple only if
``|v2| <= 1``. Every kept candidate must satisfy every bound.

Random draws come from a Philox stream keyed by the seed; trial ``k`` always
uses counter block ``k``, so results do not depend on chunking or threads.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .bounds import bound_a2, bound_a3, fekete_szego
from .classes import (
    DEGENERATE_H2,
    ClassSpec,
    DegenerateParameterError,
    FunctionCoeffs,
    coefficient_system,
    extract_schwarz,
    functional_series,
    inverse_functional_series,
    schwarz_weights,
)

RATIO_SLACK = 1e-9
UNIT_TOL = 1e-12
CHUNK = 1 << 16


@dataclass(frozen=True)
class SchwarzTuple:
    u1: complex
    u2: complex
    v1: complex
    v2: complex


def is_admissible(tup: SchwarzTuple) -> bool:
    lim = 1 + UNIT_TOL
    return (
        all(abs(c) <= lim for c in (tup.u1, tup.u2, tup.v1, tup.v2))
        and abs(tup.v1 + tup.u1) <= UNIT_TOL
    )


def _weights(spec: ClassSpec) -> tuple[float, float]:
    h2, h3 = schwarz_weights(spec.horadam, spec.x)
    if abs(h2) <= DEGENERATE_H2:
        raise DegenerateParameterError(f"h2(x) = b x = {h2!r} is too small")
    return h2, h3


def construct_candidate(spec: ClassSpec, u1: complex, u2: complex) -> tuple[FunctionCoeffs, complex]:
    """Solve the class equations for ``(a2, a3)`` and the inverse's ``v2``."""
    c1, e1, e2, f1, f2 = coefficient_system(spec).as_tuple()
    h2, h3 = _weights(spec)
    u1, u2 = complex(u1), complex(u2)
    a2 = h2 * u1 / c1
    a3 = (h2 * u2 + h3 * u1 * u1 - e2 * a2 * a2) / e1
    v2 = (f1 * a2 * a2 + f2 * a3 - h3 * u1 * u1) / h2
    return FunctionCoeffs(a2, a3), v2


def roundtrip_check(spec: ClassSpec, u1: complex, u2: complex, order: int = 8) -> float:
    """``max(|u1 - u1'|, |u2 - u2'|)`` after a trip through the class functional."""
    f, _ = construct_candidate(spec, u1, u2)
    r1, r2 = extract_schwarz(functional_series(spec, f, order), spec.horadam, spec.x)
    return max(abs(r1 - u1), abs(r2 - u2))


def inverse_roundtrip_check(spec: ClassSpec, u1: complex, u2: complex, order: int = 8) -> float:
    """Same as :func:`roundtrip_check` for ``f^{-1}``, recovering ``(-u1, v2)``."""
    f, v2 = construct_candidate(spec, u1, u2)
    r1, r2 = extract_schwarz(inverse_functional_series(spec, f, order), spec.horadam, spec.x)
    return max(abs(r1 + u1), abs(r2 - v2))


def sample_schwarz(seed: int, start: int, count: int, strict: bool = False):
    """Draw ``(u1, u2)`` for trials ``start .. start + count - 1``.

    Both are uniform in the closed unit disk. With ``strict`` the radius of
    ``u2`` is scaled into ``[0, 1 - |u1|^2]``, the bound a genuine Schwarz
    function obeys; the same raw draws are used either way.
    """
    bitgen = np.random.Philox(key=seed)
    bitgen.advance(start)
    raw = np.random.Generator(bitgen).random((count, 4))
    r1 = np.sqrt(raw[:, 0])
    r2 = np.sqrt(raw[:, 2])
    if strict:
        r2 = r2 * (1 - r1 * r1)
    u1 = r1 * np.exp(2j * np.pi * raw[:, 1])
    u2 = r2 * np.exp(2j * np.pi * raw[:, 3])
    return u1, u2


@dataclass
class VerifyReport:
    trials: int
    admissible: int
    violations: int
    max_ratio_a2: float
    max_ratio_a3: float
    max_ratio_fs: float
    seed: int
    spec: ClassSpec
    nu_grid: list[float]
    strict_schwarz: bool = False
    max_ratio_fs_by_nu: list[float] = field(default_factory=list)
    backend: str = kernels.BACKEND

    @property
    def certified(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "admissible": self.admissible,
            "violations": self.violations,
            "max_ratio_a2": self.max_ratio_a2,
            "max_ratio_a3": self.max_ratio_a3,
            "max_ratio_fs": self.max_ratio_fs,
            "max_ratio_fs_by_nu": list(self.max_ratio_fs_by_nu),
            "seed": self.seed,
            "spec": self.spec.to_dict(),
            "nu_grid": list(self.nu_grid),
            "strict_schwarz": self.strict_schwarz,
            "backend": self.backend,
        }


def certify_samples(spec: ClassSpec, nu_grid, u1, u2, backend: str | None = None):
    """Score explicit samples; returns the raw kernel tuple."""
    h2, h3 = _weights(spec)
    nus = np.asarray(list(nu_grid), dtype=float)
    fs = np.array([fekete_szego(spec, nu)[0] for nu in nus], dtype=float)
    kernel = kernels.BACKENDS[backend or kernels.BACKEND]
    return kernel(u1, u2, coefficient_system(spec).as_tuple(), h2, h3,
                  bound_a2(spec), bound_a3(spec), nus, fs, RATIO_SLACK)


def run_verification(spec: ClassSpec, nu_grid, trials: int, seed: int = 0,
                     strict_schwarz: bool = False, workers: int = 1,
                     backend: str | None = None) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    _weights(spec)
    nu_grid = [float(nu) for nu in nu_grid]

    def block(start):
        count = min(CHUNK, trials - start)
        u1, u2 = sample_schwarz(seed, start, count, strict_schwarz)
        return certify_samples(spec, nu_grid, u1, u2, backend)

    starts = range(0, trials, CHUNK)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(block, starts))
    else:
        parts = [block(s) for s in starts]

    fs_by_nu = np.zeros(len(nu_grid))
    for part in parts:
        fs_by_nu = np.maximum(fs_by_nu, part[4])
    return VerifyReport(
        trials=trials,
        admissible=sum(p[0] for p in parts),
        violations=sum(p[1] for p in parts),
        max_ratio_a2=max(p[2] for p in parts),
        max_ratio_a3=max(p[3] for p in parts),
        max_ratio_fs=float(fs_by_nu.max()) if fs_by_nu.size else 0.0,
        seed=seed,
        spec=spec,
        nu_grid=nu_grid,
        strict_schwarz=strict_schwarz,
        max_ratio_fs_by_nu=[float(v) for v in fs_by_nu],
        backend=backend or kernels.BACKEND,
    )
