"""First integral: integrating factor, potential quadrature, energy."""

import math

import pytest

from sigmak import (FirstIntegral, IntegratorConfig, PhasePoint, RegionError,
                    SigmaParams, SingularityError, alpha_from_k, critical_k,
                    energy, g_of_k, half_period, integrate, l_of_k,
                    nullcline_alpha, potential)

P214 = SigmaParams(2, 1, 4.0)
P231 = SigmaParams(2, 3, 1.0)


def _kernel(params, k):
    l = l_of_k(params, k)
    return g_of_k(params, k) * (k * k - k * l) / (2.0 * k - l)


def _simpson(f, a, b, n):
    h = (b - a) / n
    acc = f(a) + f(b)
    for j in range(1, n):
        acc += f(a + j * h) * (4 if j % 2 else 2)
    return acc * h / 3.0


def test_g_values():
    assert g_of_k(P214, 2.0) == pytest.approx(1.0, rel=1e-15)
    assert g_of_k(P214, 5.0) == pytest.approx(0.5, rel=1e-15)
    with pytest.raises(SingularityError):
        g_of_k(P214, 1.0)  # the k_c2 locus


def test_g_positive_and_ode():
    for params in (P214, P231, SigmaParams(2, 2, 6.0), SigmaParams(3, 4, -1.0)):
        lines = critical_k(params).k_c2_lines()
        for k in (0.15, 0.45, 1.6, 2.8, -0.9, -2.1):
            if params.i >= 2 and params.c != 0.0 and abs(k) < 0.05:
                continue
            if any(abs(k - r) < 0.08 for r in lines):
                continue
            g = g_of_k(params, k)
            assert g > 0.0
            h = 1e-6 * max(abs(k), 0.1)
            dg = (g_of_k(params, k + h) - g_of_k(params, k - h)) / (2 * h)
            expect = -2.0 * g / (2.0 * k - l_of_k(params, k))
            assert dg == pytest.approx(expect, rel=1e-6)


def test_region_construction_and_errors():
    fi = FirstIntegral(P214, 2.0)
    assert fi.region == (1.0, math.inf)
    with pytest.raises(RegionError):
        FirstIntegral(P214, 1.0 + 5e-7)  # too close to the k_c2 cut
    with pytest.raises(RegionError):
        potential(fi, 0.5)  # other region
    with pytest.raises(RegionError):
        potential(fi, 1.0 + 5e-7)  # inside the margin
    # regions are the intervals cut by {0, +/-k_c2}
    fi2 = FirstIntegral(SigmaParams(2, 2, 6.0), -0.5)
    assert fi2.region == (-math.sqrt(1.2), 0.0)
    fi3 = FirstIntegral(SigmaParams(3, 4, -1.0), 1.0)
    assert fi3.region == (0.0, math.inf)


def test_potential_values_and_oracle():
    fi = FirstIntegral(P214, 2.0)
    assert potential(fi, 2.0) == 0.0
    val = potential(fi, 3.0)
    oracle = _simpson(lambda k: _kernel(P214, k), 2.0, 3.0, 4000)
    assert val == pytest.approx(oracle, abs=1e-10)
    # antisymmetric under swapping the limits
    fi_b = FirstIntegral(P214, 3.0)
    assert potential(fi_b, 2.0) == pytest.approx(-val, abs=1e-12)


def test_energy_mirror_exact():
    fi = FirstIntegral(P214, 2.0)
    for a, k in ((0.7, 2.5), (1.3, 1.8), (0.0, 3.0)):
        assert energy(fi, PhasePoint(a, k)) == energy(fi, PhasePoint(-a, k))


def test_energy_conserved_over_period():
    cfg = IntegratorConfig()
    period = 2.0 * half_period(P214, 3.0, cfg)
    tr = integrate(P214, PhasePoint(0.0, 3.0),
                   IntegratorConfig(s_max=1.0001 * period), "forward")
    fi = FirstIntegral(P214, 2.0)
    e0 = energy(fi, PhasePoint(0.0, 3.0))
    worst = max(abs(energy(fi, PhasePoint(a, k)) - e0)
                for _, a, k in tr.samples[::7])
    assert worst <= 1e-8 * abs(e0)


def test_same_orbit_energy_equality():
    # nullcline point and a generic point of the same orbit agree to 1e-9
    cfg = IntegratorConfig(s_max=3.0)
    tr = integrate(P214, PhasePoint(0.0, 3.0), cfg, "forward")
    fi = FirstIntegral(P214, 2.0)
    e0 = energy(fi, PhasePoint(0.0, 3.0))
    on_null = None
    for ev in tr.events:
        if ev.kind == "nullcline":
            on_null = PhasePoint(ev.alpha, ev.k)
            break
    assert on_null is not None
    assert energy(fi, on_null) == pytest.approx(e0, abs=1e-9 * abs(e0) + 1e-12)


def test_alpha_from_k_round_trip():
    fi = FirstIntegral(P214, 2.0)
    e = energy(fi, PhasePoint(0.7, 2.5))
    assert alpha_from_k(fi, 2.5, e) == pytest.approx(0.7, abs=1e-9)
    # turning point: alpha ~ 0 at the section extreme k = 3
    e3 = energy(fi, PhasePoint(0.0, 3.0))
    a_top = alpha_from_k(fi, 3.0, e3)
    assert a_top is not None and a_top == pytest.approx(0.0, abs=1e-7)
    # below the level set: no real alpha
    assert alpha_from_k(fi, 3.5, e3) is None


def test_level_set_matches_orbit():
    # Hausdorff proximity of the E-level set and the integrated orbit,
    # measured where each chart is well conditioned: |alpha(k)| difference
    # away from the turning points, first-order point-to-set distance
    # |E - E0|/|grad E| near them (the curve is vertical there, so a
    # fixed-k alpha difference would overstate the true distance).
    cfg = IntegratorConfig()
    period = 2.0 * half_period(P214, 3.0, cfg)
    tr = integrate(P214, PhasePoint(0.0, 3.0),
                   IntegratorConfig(s_max=1.0001 * period), "forward")
    fi = FirstIntegral(P214, 2.0)
    e0 = energy(fi, PhasePoint(0.0, 3.0))
    worst = 0.0
    h = 1e-6
    for _, a, k in tr.samples[::9]:
        if abs(a) > 0.05:
            level = alpha_from_k(fi, k, e0)
            assert level is not None
            worst = max(worst, abs(level - abs(a)))
        else:
            e = energy(fi, PhasePoint(a, k))
            de_da = a * g_of_k(fi.params, k)
            de_dk = (potential(fi, k + h) - potential(fi, k - h)) / (2 * h)
            grad = math.hypot(de_da, de_dk)
            assert grad > 1e-3
            worst = max(worst, abs(e - e0) / grad)
    assert worst < 1e-6


def test_exact_differential_path_independence():
    # loop integral of the exact 1-form around a rectangle vanishes
    params = P214

    def omega_k(a, k):  # coefficient of dk
        l = l_of_k(params, k)
        f = g_of_k(params, k) / (2.0 * k - l)
        return f * (k * k - k * l - a * a)

    def omega_a(a, k):  # coefficient of dalpha
        return g_of_k(params, k) * a

    k1, k2 = 1.6, 2.7
    a1, a2 = -0.8, 1.1
    loop = (_simpson(lambda k: omega_k(a1, k), k1, k2, 2000)
            + _simpson(lambda a: omega_a(a, k2), a1, a2, 2000)
            + _simpson(lambda k: omega_k(a2, k), k2, k1, 2000)
            + _simpson(lambda a: omega_a(a, k1), a2, a1, 2000))
    assert abs(loop) < 1e-9


def test_arc_alpha1_matches_flow():
    # independent estimate of the arc endpoint via the first integral
    cfg = IntegratorConfig()
    start = PhasePoint(0.0, 0.5)
    tr = integrate(P231, start, cfg, "forward")
    alpha_flow = None
    for ev in tr.events:
        if ev.kind == "alpha_axis" and ev.detail == "terminal":
            alpha_flow = abs(ev.alpha)
    assert alpha_flow is not None
    fi = FirstIntegral(P231, 0.4)
    e0 = energy(fi, start)
    a_cons = alpha_from_k(fi, 3e-6, e0)
    assert a_cons == pytest.approx(alpha_flow, abs=1e-5)
