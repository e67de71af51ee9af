"""Invariant suites runnable from the CLI (`sigmak selftest`).

One line per check, PASS or FAIL; exit status nonzero if anything fails.
These mirror the per-module invariants, sized to run in a few seconds.
"""

from __future__ import annotations

import random
import sys

from .conserved import FirstIntegral, energy, g_of_k, potential
from .flow import (IntegratorConfig, closed_form_c0, closed_form_line,
                   half_period, integrate)
from .geometry import pansu_profile, reconstruct_profile
from .model import (PhasePoint, SigmaParams, critical_k, dl_dk, l_of_k,
                    nullcline_alpha, sigma_of, vector_field)
from .svgplot import render_portrait_svg

_PARAM_GRID = [
    SigmaParams(2, 1, 4.0),
    SigmaParams(2, 2, 6.0),
    SigmaParams(2, 3, 1.0),
    SigmaParams(3, 2, 2.0),
    SigmaParams(3, 4, -1.0),
    SigmaParams(2, 3, -1.0),
    SigmaParams(2, 2, 0.0),
    SigmaParams(4, 5, 0.7),
]


def _sample_k(rng, params):
    while True:
        k = rng.uniform(-4.0, 4.0)
        if abs(k) > 1e-3 or (params.i == 1 or params.c == 0.0):
            return k


def check_constraint_closure():
    rng = random.Random(101)
    for _ in range(2000):
        params = rng.choice(_PARAM_GRID)
        k = _sample_k(rng, params)
        sig = sigma_of(params.n, params.i, l_of_k(params, k), k)
        scale = max(1.0, abs(params.c), abs(k) ** params.i * params.weight * 4)
        assert abs(sig - params.c) <= 1e-12 * scale, (params, k, sig)


def check_derivative_consistency():
    rng = random.Random(102)
    for _ in range(600):
        params = rng.choice(_PARAM_GRID)
        k = _sample_k(rng, params)
        if abs(k) < 1e-2:
            continue
        h = 1e-6 * abs(k)
        num = (l_of_k(params, k + h) - l_of_k(params, k - h)) / (2 * h)
        ana = dl_dk(params, k)
        assert abs(num - ana) <= 1e-5 * max(1.0, abs(ana)), (params, k)


def check_symmetries():
    rng = random.Random(103)
    for _ in range(2000):
        params = rng.choice(_PARAM_GRID)
        k = _sample_k(rng, params)
        a = rng.uniform(-4.0, 4.0)
        dk, da = vector_field(params, PhasePoint(a, k))
        dk_m, da_m = vector_field(params, PhasePoint(-a, k))
        assert dk_m == -dk and da_m == da, "k-axis reversibility"
        if params.i % 2 == 0 and k != 0.0:
            dk_f, da_f = vector_field(params, PhasePoint(a, -k))
            assert abs(dk_f + dk) <= 1e-9 * (1 + abs(dk)), "even-i mirror"
            assert abs(da_f - da) <= 1e-9 * (1 + abs(da)), "even-i mirror"
        if params.i % 2 == 1 and params.c != 0.0 and k != 0.0:
            flipped = SigmaParams(params.n, params.i, -params.c)
            dk_c, da_c = vector_field(flipped, PhasePoint(a, -k))
            assert abs(dk_c + dk) <= 1e-9 * (1 + abs(dk)), "odd-i c-flip"
            assert abs(da_c - da) <= 1e-9 * (1 + abs(da)), "odd-i c-flip"
        l = rng.uniform(-3.0, 3.0)
        s1 = sigma_of(params.n, params.i, -l, -k)
        s2 = sigma_of(params.n, params.i, l, k) * (-1) ** params.i
        assert abs(s1 - s2) <= 1e-12 * max(1.0, abs(s2)), "sign law"


def check_l_minus_2k_identity():
    rng = random.Random(104)
    for _ in range(1000):
        params = rng.choice(_PARAM_GRID)
        if params.c == 0.0:
            continue
        k = _sample_k(rng, params)
        lhs = l_of_k(params, k) - 2 * k
        n, i = params.n, params.i
        rhs = params.c_tilde * k ** (1 - i) - (2 * n + i - 1) / i * k
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs)), (params, k)


def check_critical_roots():
    for params in _PARAM_GRID:
        cv = critical_k(params)
        for r in cv.k_c2_lines():
            assert abs(l_of_k(params, r) - 2 * r) < 1e-10
            lo, hi = 0.5 * r, 1.5 * r
            f = lambda k: l_of_k(params, k) - 2 * k
            if f(lo) * f(hi) < 0:  # independent bisection confirmation
                for _ in range(80):
                    mid = 0.5 * (lo + hi)
                    if f(lo) * f(mid) <= 0:
                        hi = mid
                    else:
                        lo = mid
                assert abs(0.5 * (lo + hi) - r) < 1e-9
        for r in cv.k_c1_points():
            assert abs(l_of_k(params, r) - r) < 1e-10


def check_nullcline_residual():
    rng = random.Random(105)
    for _ in range(400):
        params = rng.choice(_PARAM_GRID)
        k = _sample_k(rng, params)
        try:
            a = nullcline_alpha(params, k)
        except Exception:
            continue
        if a is None:
            continue
        _, da = vector_field(params, PhasePoint(a, k))
        assert abs(da) < 1e-9 * (1.0 + k * k), (params, k, da)


def check_g_kernel():
    rng = random.Random(106)
    for params in _PARAM_GRID:
        if params.c == 0.0:
            continue
        lines = critical_k(params).k_c2_lines()
        for _ in range(60):
            k = rng.uniform(0.05, 3.0) * rng.choice((1.0, -1.0))
            if params.i >= 2 and abs(k) < 5e-2:
                continue
            if any(abs(k - r) < 5e-2 for r in lines):
                continue
            g = g_of_k(params, k)
            assert g > 0.0
            h = 1e-6 * max(abs(k), 0.1)
            try:
                dg = (g_of_k(params, k + h) - g_of_k(params, k - h)) / (2 * h)
            except Exception:
                continue
            expect = -2.0 * g / (2 * k - l_of_k(params, k))
            assert abs(dg - expect) <= 1e-5 * max(1.0, abs(expect)), (params, k)


def check_potential_against_simpson():
    params = SigmaParams(2, 1, 4.0)
    fi = FirstIntegral(params, 2.0)
    val = potential(fi, 3.0)

    def integrand(k):
        l = l_of_k(params, k)
        return g_of_k(params, k) * (k * k - k * l) / (2 * k - l)

    n = 4000
    h = 1.0 / n
    acc = integrand(2.0) + integrand(3.0)
    for j in range(1, n):
        acc += integrand(2.0 + j * h) * (4 if j % 2 else 2)
    simpson = acc * h / 3.0
    assert abs(val - simpson) < 1e-10, (val, simpson)


def check_energy_drift():
    params = SigmaParams(2, 1, 4.0)
    cfg = IntegratorConfig()
    period = 2.0 * half_period(params, 3.0, cfg)
    trace = integrate(params, PhasePoint(0.0, 3.0),
                      IntegratorConfig(s_max=period * 1.001), "forward")
    fi = FirstIntegral(params, 2.0)
    e0 = energy(fi, PhasePoint(0.0, 3.0))
    for s, a, k in trace.samples[::10]:
        e = energy(fi, PhasePoint(a, k))
        assert abs(e - e0) <= 1e-8 * abs(e0), (s, e, e0)


def check_closed_forms():
    params = SigmaParams(2, 1, 0.0)
    trace = integrate(params, PhasePoint(1.0, 0.0),
                      IntegratorConfig(s_max=10.0), "forward")
    for s, a, k in trace.samples:
        assert abs(a - closed_form_c0(1.0, s).alpha) < 1e-8
        assert k == 0.0
    params = SigmaParams(2, 1, 4.0)
    trace = integrate(params, PhasePoint(0.0, 1.0),
                      IntegratorConfig(s_max=1.4), "forward")
    for s, a, k in trace.samples:
        ref = closed_form_line(params, 0.0, 0.0, s)
        assert abs(a - ref.alpha) < 1e-8 and abs(k - 1.0) < 1e-9


def check_pansu_reconstruction():
    params = SigmaParams(2, 1, 4.0)
    profile = reconstruct_profile(params, PhasePoint(0.0, 1.0),
                                  IntegratorConfig())
    for s, r, t, a, k in profile.samples[::25]:
        if not 1e-3 <= r <= 1.0 - 1e-3:
            continue
        f = pansu_profile(1.0, r)
        expect = f if s <= 0 else -f
        assert abs(t - expect) < 1e-6, (s, r, t, expect)


def check_determinism():
    params = SigmaParams(2, 3, 1.0)
    cfg = IntegratorConfig(s_max=20.0)
    t1 = integrate(params, PhasePoint(0.3, 1.4), cfg, "forward")
    t2 = integrate(params, PhasePoint(0.3, 1.4), cfg, "forward")
    assert t1.samples == t2.samples and t1.termination == t2.termination
    svg1 = render_portrait_svg((-2, 2), (-2, 2), "t",
                               [("Periodic", t1.samples and
                                 [(a, k) for _, a, k in t1.samples])],
                               [], [1.0], [(0.0, 1.0)])
    svg2 = render_portrait_svg((-2, 2), (-2, 2), "t",
                               [("Periodic", [(a, k) for _, a, k in t2.samples])],
                               [], [1.0], [(0.0, 1.0)])
    assert svg1 == svg2


def check_trace_constraint_closure():
    params = SigmaParams(2, 3, 1.0)
    trace = integrate(params, PhasePoint(0.0, 1.5),
                      IntegratorConfig(s_max=5.0), "forward")
    for s, a, k in trace.samples[::20]:
        if abs(k) < 1e-6:
            continue
        sig = sigma_of(params.n, params.i, l_of_k(params, k), k)
        assert abs(sig - params.c) <= 1e-11 * max(1.0, abs(k) ** 3)


CHECKS = [
    ("constraint closure sigma(l(k),k)=c", check_constraint_closure),
    ("dl/dk vs central differences", check_derivative_consistency),
    ("field symmetries and sign law", check_symmetries),
    ("l-2k identity", check_l_minus_2k_identity),
    ("critical roots + bisection oracle", check_critical_roots),
    ("nullcline residual", check_nullcline_residual),
    ("integrating-factor kernel ODE", check_g_kernel),
    ("potential vs composite Simpson", check_potential_against_simpson),
    ("energy drift over one period", check_energy_drift),
    ("closed-form agreements", check_closed_forms),
    ("model-sphere reconstruction", check_pansu_reconstruction),
    ("bit determinism (trace + SVG)", check_determinism),
    ("constraint closure along traces", check_trace_constraint_closure),
]


def run_selftest() -> int:
    failures = 0
    for name, fn in CHECKS:
        try:
            fn()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL {name}: {exc}")
        except Exception as exc:  # noqa: BLE001 - report, keep running
            failures += 1
            print(f"FAIL {name}: {type(exc).__name__}: {exc}")
        else:
            print(f"PASS {name}")
    if failures:
        print(f"{failures} of {len(CHECKS)} checks failed")
        return 1
    print(f"all {len(CHECKS)} checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(run_selftest())
