import math

import numpy as np
import pytest

from conftest import random_spec
from horadam_bi.bounds import (
    Branch,
    bound_a2,
    bound_a3,
    bound_report,
    branch_gap,
    denom,
    fekete_szego,
    fs_threshold,
    omega,
)
from horadam_bi.classes import ClassKind, ClassSpec, coefficient_system
from horadam_bi.corollaries import corollary_bounds, corollary_spec
from horadam_bi.horadam import CHEBYSHEV_SECOND, FIBONACCI, HoradamParams
from horadam_bi.reduction import all_deviations, compare_point, corollary_deviation

SSTAR, MOCANU, BLEND = ClassKind.SSTAR, ClassKind.MOCANU, ClassKind.ALPHA_BLEND
FIB_HALF = ClassSpec(SSTAR, 0.0, FIBONACCI, 0.5)


def test_denom_examples():
    assert denom(FIB_HALF) == pytest.approx(-1.0, abs=1e-15)
    assert denom(ClassSpec(SSTAR, 0.0, HoradamParams(3.0, 2.0, 2.0, 0.0), 0.7)) == 0.0
    t = 0.3
    assert denom(ClassSpec(MOCANU, 1.0, CHEBYSHEV_SECOND, t)) == pytest.approx(4 * (1 - 2 * t * t))


def test_denom_matches_printed_brackets(rng):
    for _ in range(100):
        a, b, p, q = rng.uniform(-3, 3, 4)
        x, al = rng.uniform(-2, 2), rng.uniform(0, 1)
        params = HoradamParams(a, b, p, q)
        sstar = ((1 + 4 * al) * b - p * (1 + 2 * al) ** 2) * b * x * x - q * a * (1 + 2 * al) ** 2
        moc = ((1 + al) * b - p * (1 + al) ** 2) * b * x * x - q * a * (1 + al) ** 2
        blend = ((al * al - 3 * al + 4) * b - 2 * p * (2 - al) ** 2) * b * x * x - 2 * q * a * (2 - al) ** 2
        assert denom(ClassSpec(SSTAR, al, params, x)) == pytest.approx(sstar, rel=1e-12, abs=1e-12)
        assert denom(ClassSpec(MOCANU, al, params, x)) == pytest.approx(moc, rel=1e-12, abs=1e-12)
        assert denom(ClassSpec(BLEND, al, params, x)) == pytest.approx(blend / 2, rel=1e-12, abs=1e-12)


def test_bound_a2_examples():
    assert bound_a2(FIB_HALF) == pytest.approx(0.5 * math.sqrt(0.5), rel=1e-15)
    assert bound_a2(FIB_HALF) == pytest.approx(0.353553, abs=1e-6)
    assert bound_a2(ClassSpec(SSTAR, 1.0, CHEBYSHEV_SECOND, 0.5)) == pytest.approx(1 / math.sqrt(5), rel=1e-14)
    assert math.isinf(bound_a2(ClassSpec(SSTAR, 0.0, HoradamParams(1.0, 1.0, 1.0, 0.0), 0.8)))


def test_bound_a3_examples():
    assert bound_a3(FIB_HALF) == pytest.approx(0.5, rel=1e-15)
    params, x = HoradamParams(1.3, -0.7, 2.0, 0.4), 1.1
    bx = abs(params.b * x)
    assert bound_a3(ClassSpec(MOCANU, 1.0, params, x)) == pytest.approx(bx / 6 + bx * bx / 4, rel=1e-15)
    assert bound_a3(ClassSpec(BLEND, 1.0, params, x)) == pytest.approx(bound_a3(ClassSpec(SSTAR, 0.0, params, x)))


def test_fekete_szego_examples():
    assert fekete_szego(FIB_HALF, 1.0) == (pytest.approx(0.25), Branch.INNER)
    assert fs_threshold(FIB_HALF) == pytest.approx(2.0)
    assert fekete_szego(FIB_HALF, 0.0) == (pytest.approx(0.25), Branch.INNER)
    bound, branch = fekete_szego(FIB_HALF, 4.0)
    assert branch is Branch.OUTER and bound == pytest.approx(0.375, rel=1e-15)
    assert fekete_szego(FIB_HALF, 3.0)[1] is Branch.BOUNDARY
    assert fekete_szego(FIB_HALF, -1.0)[1] is Branch.BOUNDARY


def test_nu_one_is_always_inner(rng):
    for _ in range(50):
        s = random_spec(rng)
        bound, branch = fekete_szego(s, 1.0)
        assert branch in (Branch.INNER, Branch.BOUNDARY)
        assert bound == pytest.approx(abs(s.horadam.b * s.x) / coefficient_system(s).e1)


def test_vacuous_fekete_szego():
    s = ClassSpec(SSTAR, 0.0, HoradamParams(1.0, 1.0, 1.0, 0.0), 0.8)
    assert fekete_szego(s, 1.0)[1] is Branch.INNER
    assert math.isinf(fekete_szego(s, 1.5)[0])
    report = bound_report(s, 2.0)
    assert report.vacuous


def test_zero_x_is_degenerate():
    report = bound_report(ClassSpec(SSTAR, 0.0, FIBONACCI, 0.0), 2.0)
    assert report.degenerate
    assert report.a2_bound == 0 and report.a3_bound == 0 and report.fs_bound == 0


def test_omega_selects_branch(rng):
    for _ in range(200):
        s = random_spec(rng)
        nu = rng.uniform(-5, 5)
        _, branch = fekete_szego(s, nu)
        e1 = coefficient_system(s).e1
        if branch is Branch.INNER:
            assert abs(omega(s, nu)) <= 1 / (2 * e1) * (1 + 1e-12)
        elif branch is Branch.OUTER:
            assert abs(omega(s, nu)) >= 1 / (2 * e1) * (1 - 1e-12)


def test_branch_continuity_and_monotonicity(rng):
    for _ in range(200):
        s = random_spec(rng)
        assert branch_gap(s) <= 1e-11
        thr = fs_threshold(s)
        inner = fekete_szego(s, 1.0)[0]
        assert fekete_szego(s, 1 + 0.5 * thr)[0] == inner
        outer = [fekete_szego(s, 1 + thr * k)[0] for k in (1.5, 2.0, 4.0)]
        assert outer[0] < outer[1] < outer[2]


def test_theorem_thresholds_printed_variants(rng):
    """The printed threshold denominators 2 b^2 x^2 (1 + 3a) and b^2 x^2 (2 + 4a)."""
    for _ in range(50):
        a, b, p, q = rng.uniform(-3, 3, 4)
        x, al = rng.uniform(0.1, 2), rng.uniform(0, 1)
        params = HoradamParams(a, b, p, q)
        s = ClassSpec(SSTAR, al, params, x)
        assert fs_threshold(s) == pytest.approx(abs(denom(s)) / (2 * b * b * x * x * (1 + 3 * al)), rel=1e-12)
        m = ClassSpec(MOCANU, al, params, x)
        assert fs_threshold(m) == pytest.approx(abs(denom(m)) / (b * b * x * x * (2 + 4 * al)), rel=1e-12)


def test_corollary_examples():
    assert corollary_bounds("sstar_x", params=FIBONACCI, x=0.5).a2_bound == pytest.approx(0.353553, abs=1e-6)
    assert corollary_bounds("k_t", t=0.5).a2_bound == pytest.approx(0.5 / math.sqrt(0.5), rel=1e-15)
    t = 0.37
    assert corollary_bounds("sstar_t", alpha=0.0, t=t).a2_bound == pytest.approx(2 * t * math.sqrt(2 * t))
    fs = corollary_bounds("k_t", t=0.5, nu=1.0)
    assert fs.fs_bound == pytest.approx(0.5 / 3) and fs.fs_branch is Branch.INNER
    with pytest.raises(KeyError):
        corollary_bounds("nope", t=0.5)


@pytest.mark.parametrize("name", ["sstar_x", "sstar_t", "k_x", "mocanu_t", "k_t", "l_t"])
def test_engine_matches_corollary(name):
    dev = corollary_deviation(name, grid_size=8)
    assert dev.max_rel <= 1e-11, dev


def test_specialisation_chain():
    t = 0.43
    for al in (0.0, 0.3, 1.0):
        assert compare_point("sstar_t", alpha=al, t=t) <= 1e-11
        assert compare_point("mocanu_t", alpha=al, t=t) <= 1e-11
        assert compare_point("l_t", alpha=al, t=t) <= 1e-11
    assert corollary_spec("k_x", params=FIBONACCI, x=0.3) == ClassSpec(MOCANU, 1.0, FIBONACCI, 0.3)


def test_printed_blend_chebyshev_form_is_inconsistent():
    # agrees only where alpha^2 - 5 alpha + 4 vanishes
    assert compare_point("l_t_printed", alpha=1.0, t=0.6) <= 1e-12
    assert compare_point("l_t_printed", alpha=0.0, t=0.6) > 0.1
    # at alpha = 0 the blend class is the convex one: the general form reduces to k_t
    for t in np.linspace(0.05, 0.95, 7):
        assert corollary_bounds("l_t", alpha=0.0, t=t).a2_bound == pytest.approx(
            corollary_bounds("k_t", t=t).a2_bound, rel=1e-12)


def test_reduce_single_point():
    devs = all_deviations(1)
    assert [d.points for d in devs] == [1] * 6
    assert all(d.ok for d in devs)
