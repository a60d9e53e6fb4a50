"""Exit criteria: one test per criterion, each reporting a PASS/FAIL line."""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from horadam_bi.bounds import bound_a2, branch_gap, fekete_szego
from horadam_bi.classes import ClassKind, ClassSpec, FunctionCoeffs, coefficient_system, functional_series
from horadam_bi.corollaries import COROLLARIES, corollary_spec
from horadam_bi.horadam import (
    CHEBYSHEV_SECOND,
    FIBONACCI,
    HoradamParams,
    chebyshev_u_trig,
    gf_coefficients,
    horadam_eval,
    horadam_sequence,
)
from horadam_bi.powerseries import TruncatedSeries, revert
from horadam_bi.reduction import all_deviations, grid_points
from horadam_bi.verify import roundtrip_check, run_verification

SSTAR, MOCANU, BLEND = ClassKind.SSTAR, ClassKind.MOCANU, ClassKind.ALPHA_BLEND


def check(label, ok, detail, elapsed=None, budget=None):
    within = budget is None or elapsed < budget
    timing = "" if elapsed is None else f" [{elapsed:.2f}s / {budget:g}s]"
    ACCEPTANCE_LINES.append(f"{'PASS' if ok and within else 'FAIL'}  {label}: {detail}{timing}")
    assert ok, detail
    assert within, f"{label} took {elapsed:.2f}s, budget {budget}s"


def test_c1_recurrence_vs_generating_function():
    rng = np.random.default_rng(1)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        params = HoradamParams(*rng.uniform(-3, 3, 4))
        x = rng.uniform(-2, 2)
        rec = np.array(horadam_sequence(params, 12, x))
        gf = np.array(gf_coefficients(params, x, 12))
        dev = np.abs(rec - gf) / np.maximum(np.abs(rec), 1e-2)
        worst = max(worst, float(dev.max()))
        np.testing.assert_allclose(gf, rec, rtol=1e-10, atol=1e-12)
    elapsed = time.perf_counter() - start
    check("C1 oracle equivalence", worst <= 1e-10, f"max rel dev {worst:.2e} <= 1e-10", elapsed, 1.0)


def test_c2_chebyshev_identity():
    start = time.perf_counter()
    worst = 0.0
    for n in range(11):
        for phi in np.linspace(0.04, math.pi - 0.04, 25):
            worst = max(worst, abs(horadam_eval(CHEBYSHEV_SECOND, n + 1, math.cos(phi)) - chebyshev_u_trig(n, phi)))
    elapsed = time.perf_counter() - start
    check("C2 Chebyshev identity", worst <= 1e-9, f"max dev {worst:.2e} <= 1e-9", elapsed, 1.0)


def test_c3_inverse_series():
    rng = np.random.default_rng(3)
    start = time.perf_counter()
    worst = 0.0
    for _ in range(100):
        a2, a3, a4 = rng.uniform(-2, 2, 3)
        g = revert(TruncatedSeries([0, 1, a2, a3, a4]))
        expected = [0, 1, -a2, 2 * a2 ** 2 - a3, -(5 * a2 ** 3 - 5 * a2 * a3 + a4)]
        worst = max(worst, float(np.max(np.abs(g.coeffs - expected))))
    elapsed = time.perf_counter() - start
    check("C3 inverse-series formula", worst <= 1e-10, f"max dev {worst:.2e} <= 1e-10", elapsed, 1.0)


def test_c4_c5_engine_corollary_equivalence_and_continuity():
    start = time.perf_counter()
    devs = all_deviations(16)
    points = sum(d.points for d in devs)
    gap = 0.0
    for name in COROLLARIES:
        for kw in grid_points(name, 16):
            gap = max(gap, branch_gap(corollary_spec(name, **kw)))
    spot_a2 = bound_a2(ClassSpec(SSTAR, 0.0, FIBONACCI, 0.5))
    spot_fs, branch = fekete_szego(ClassSpec(MOCANU, 1.0, CHEBYSHEV_SECOND, 0.5), 1.0)
    elapsed = time.perf_counter() - start
    worst = max(d.max_rel for d in devs)
    detail = ", ".join(f"{d.name}={d.max_rel:.1e}" for d in devs)
    spots_ok = (abs(spot_a2 - 0.5 * math.sqrt(0.5)) <= 1e-15 and round(spot_a2, 6) == 0.353553
                and abs(spot_fs - 0.5 / 3) <= 1e-15 and branch.value == "Inner")
    check("C4 engine vs corollaries", worst <= 1e-11 and points >= 1000 and spots_ok,
          f"{points} points, {detail}; |a2|<={spot_a2:.6f}, fs={spot_fs:.6f}", elapsed, 5.0)
    check("C5 branch continuity", gap <= 1e-11, f"max inner/outer gap {gap:.2e} <= 1e-11")


CERT_ALPHAS = {SSTAR: (0.0, 0.5, 2.0), MOCANU: (0.0, 0.5, 1.0), BLEND: (0.0, 0.5, 1.0)}
CERT_XS = (-0.7, 0.3, 0.8)
CERT_NUS = (0.0, 0.5, 1.0, 1.5, 3.0)


def test_c6_monte_carlo_certification():
    start = time.perf_counter()
    runs = violations = 0
    worst = 0.0
    for kind, alphas in CERT_ALPHAS.items():
        for params in (FIBONACCI, CHEBYSHEV_SECOND):
            for alpha in alphas:
                for x in CERT_XS:
                    report = run_verification(ClassSpec(kind, alpha, params, x), CERT_NUS, 100_000, seed=runs)
                    runs += 1
                    violations += report.violations
                    worst = max(worst, report.max_ratio_a2, report.max_ratio_a3, report.max_ratio_fs)
    elapsed = time.perf_counter() - start
    check("C6 Monte-Carlo certification", violations == 0,
          f"{runs} runs x 1e5 trials, {violations} violations, max ratio {worst:.6f}", elapsed, 60.0)


def test_c7_roundtrip():
    rng = np.random.default_rng(7)
    start = time.perf_counter()
    worst = 0.0
    for kind in ClassKind:
        hi = 2.0 if kind is SSTAR else 1.0
        for _ in range(500):
            params = HoradamParams(*rng.uniform(-2, 2, 4))
            if abs(params.b) < 0.1:
                params = HoradamParams(params.a, 1.0, params.p, params.q)
            spec = ClassSpec(kind, rng.uniform(0, hi), params, rng.choice([-1, 1]) * rng.uniform(0.1, 1.5))
            u1 = np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            u2 = np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
            worst = max(worst, roundtrip_check(spec, u1, u2))
    elapsed = time.perf_counter() - start
    check("C7 round-trip extraction", worst <= 1e-9, f"max residual {worst:.2e} <= 1e-9", elapsed, 10.0)


def test_c8_class_coincidences():
    rng = np.random.default_rng(8)
    start = time.perf_counter()
    sys_ok = (
        coefficient_system(ClassSpec(MOCANU, 1.0, FIBONACCI, 0.5)).as_tuple()
        == coefficient_system(ClassSpec(BLEND, 0.0, FIBONACCI, 0.5)).as_tuple()
        and coefficient_system(ClassSpec(MOCANU, 0.0, FIBONACCI, 0.5)).as_tuple()
        == coefficient_system(ClassSpec(SSTAR, 0.0, FIBONACCI, 0.5)).as_tuple()
    )
    worst = 0.0
    pairs = [((MOCANU, 0.0), (SSTAR, 0.0)), ((MOCANU, 1.0), (BLEND, 0.0)), ((BLEND, 1.0), (SSTAR, 0.0))]
    for _ in range(50):
        a2, a3 = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-1, 1, 2)
        f = FunctionCoeffs(a2, a3)
        for (k1, al1), (k2, al2) in pairs:
            s1 = functional_series(ClassSpec(k1, al1, FIBONACCI, 0.5), f)
            s2 = functional_series(ClassSpec(k2, al2, FIBONACCI, 0.5), f)
            worst = max(worst, float(np.max(np.abs(s1.coeffs - s2.coeffs))))
    elapsed = time.perf_counter() - start
    check("C8 class coincidences", sys_ok and worst <= 1e-12,
          f"systems equal={sys_ok}, max series dev {worst:.2e} <= 1e-12", elapsed, 2.0)


def test_c9_cli_determinism(tmp_path):
    outs = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        proc = subprocess.run(
            [sys.executable, "-m", "horadam_bi", "verify", "--class", "mocanu", "--alpha", "0.5",
             "--family", "chebyshev2", "--x", "0.5", "--nu", "0", "1", "3", "--trials", "50000",
             "--seed", "1234", "--out", str(path)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stderr
        outs.append(path.read_bytes())
    check("C9 determinism", outs[0] == outs[1], f"two runs, {len(outs[0])} bytes, identical={outs[0] == outs[1]}")
