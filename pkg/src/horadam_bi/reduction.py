"""Grid comparison of the generic bound engine against the closed forms."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .bounds import bound_report
from .corollaries import COROLLARIES, corollary_bounds, corollary_spec
from .horadam import HoradamParams

NU_PROBES = (-1.0, 0.0, 0.5, 1.0, 1.5, 3.0, 10.0)
PARAM_BOX = (-1.0, 1.0, 2.0)
SSTAR_ALPHA_MAX = 2.0


@dataclass
class Deviation:
    name: str
    points: int
    max_rel: float

    @property
    def ok(self) -> bool:
        return self.max_rel <= 1e-11


def rel_dev(engine: float, closed: float) -> float:
    if math.isinf(engine) or math.isinf(closed):
        return 0.0 if engine == closed else math.inf
    scale = max(abs(engine), abs(closed))
    return 0.0 if scale == 0 else abs(engine - closed) / scale


def grid_points(name: str, grid_size: int):
    """Keyword-argument dicts covering the corollary's parameter domain."""
    if grid_size == 1:
        if name in ("sstar_x", "k_x"):
            yield {"params": HoradamParams(1, 1, 1, 1), "x": 0.5}
        else:
            yield {"alpha": 0.5, "t": 0.5}
        return
    if name in ("sstar_x", "k_x"):
        xs = [x for x in np.linspace(-2, 2, grid_size) if x != 0]
        for a, b, p, q in itertools.product(PARAM_BOX, repeat=4):
            for x in xs:
                yield {"params": HoradamParams(a, b, p, q), "x": float(x)}
        return
    ts = np.linspace(0.02, 0.98, grid_size)
    if name == "k_t":
        for t in np.linspace(0.02, 0.98, grid_size * grid_size):
            yield {"t": float(t)}
        return
    hi = SSTAR_ALPHA_MAX if name == "sstar_t" else 1.0
    for alpha in np.linspace(0.0, hi, grid_size):
        for t in ts:
            yield {"alpha": float(alpha), "t": float(t)}


def compare_point(name: str, nus=NU_PROBES, **kw) -> float:
    """Largest relative gap over a2, a3, threshold and the Fekete-Szegő bound."""
    spec = corollary_spec(name, **kw)
    worst = 0.0
    for nu in nus:
        eng = bound_report(spec, nu)
        cor = corollary_bounds(name, nu=nu, **kw)
        worst = max(
            worst,
            rel_dev(eng.a2_bound, cor.a2_bound),
            rel_dev(eng.a3_bound, cor.a3_bound),
            rel_dev(eng.fs_bound, cor.fs_bound),
            rel_dev(eng.threshold, cor.threshold),
        )
    return worst


def corollary_deviation(name: str, grid_size: int = 16) -> Deviation:
    worst, n = 0.0, 0
    for kw in grid_points(name, grid_size):
        worst = max(worst, compare_point(name, **kw))
        n += 1
    return Deviation(name, n, worst)


def all_deviations(grid_size: int = 16) -> list[Deviation]:
    return [corollary_deviation(name, grid_size) for name in COROLLARIES]
