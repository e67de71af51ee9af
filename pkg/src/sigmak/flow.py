"""Orbit integration and qualitative classification of the phase flow.

The driver is an explicit Dormand-Prince 5(4) pair with FSAL, marching a
small tuple state with events located by bisection on single embedded
steps.  Near the alpha-axis (k = 0) the field for i >= 2, c != 0 is
singular like k^(1-i); there the integrator switches to the rescaled time
tau with ds = k^(i-1) dtau, under which both components become polynomial
in (alpha, k) and the finite-s arrival at k = 0 is an ordinary transversal
crossing.  Arc length s is co-integrated and remains the reported
parameter; for even i the multiplier k^(i-1) is signed, so the tau
direction is chosen to keep s advancing in the requested direction.

Everything is plain float arithmetic in a fixed order: identical inputs
and configuration produce bit-identical traces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import (ClassificationError, DomainError, IntegrationError,
                     PoleError, SingularityError)
from .model import CriticalValues, PhasePoint, SigmaParams, critical_k

__all__ = [
    "IntegratorConfig",
    "OrbitEvent",
    "OrbitTrace",
    "OrbitClass",
    "Stationary",
    "ConstantKLine",
    "Periodic",
    "ArcToAlphaAxis",
    "ArcBiInfinite",
    "HomoclinicToOrigin",
    "Truncated",
    "integrate",
    "classify_orbit",
    "half_period",
    "closed_form_line",
    "closed_form_c0",
]


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances and horizons for the adaptive integrator."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = 0.01
    s_max: float = 200.0
    box_bound: float = 1e6
    blowup_threshold: float = 1e8
    section_tol: float = 1e-9

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol", "max_step", "s_max", "box_bound",
                     "blowup_threshold", "section_tol"):
            if not getattr(self, name) > 0.0:
                raise DomainError(f"{name} must be strictly positive")
        if self.rel_tol < 1e-14:
            raise DomainError("rel_tol below 1e-14 is not honest in binary64")


@dataclass(frozen=True)
class OrbitEvent:
    kind: str  # 'k_axis' | 'alpha_axis' | 'nullcline' | 'truncation'
    s: float
    alpha: float
    k: float
    detail: str = ""


@dataclass
class OrbitTrace:
    """Sampled solution curve; samples are (s, alpha, k) with s strictly
    increasing, events sorted by s."""

    params: SigmaParams
    samples: List[Tuple[float, float, float]]
    events: List[OrbitEvent]
    termination: str


class OrbitClass:
    """Qualitative outcome of classify_orbit; one subclass per verdict."""

    kind = "OrbitClass"


@dataclass(frozen=True)
class Stationary(OrbitClass):
    alpha: float
    k: float
    kind = "Stationary"


@dataclass(frozen=True)
class ConstantKLine(OrbitClass):
    k_value: float
    kind = "ConstantKLine"


@dataclass(frozen=True)
class Periodic(OrbitClass):
    period: float
    k_min: float
    k_max: float
    kind = "Periodic"


@dataclass(frozen=True)
class ArcToAlphaAxis(OrbitClass):
    s_minus: float
    s_plus: float
    alpha_end: float
    kind = "ArcToAlphaAxis"


@dataclass(frozen=True)
class ArcBiInfinite(OrbitClass):
    alpha_limit: float
    kind = "ArcBiInfinite"


@dataclass(frozen=True)
class HomoclinicToOrigin(OrbitClass):
    kind = "HomoclinicToOrigin"


@dataclass(frozen=True)
class Truncated(OrbitClass):
    reason: str
    kind = "Truncated"


# Dormand-Prince 5(4) tableau; the last A row doubles as the 5th-order
# weights (FSAL) and _E holds b5 - b4 for the embedded error estimate.
_DP_A = (
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_DP_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200,
         22 / 525, -1 / 40)


def _dp_step(rhs, y, h, f0):
    """One embedded step: (y5, err, rhs(y5)) or None on nonfinite values."""
    dim = range(len(y))
    ks = [f0]
    yy = y
    for row in _DP_A:
        nr = range(len(row))
        yy = tuple(y[d] + h * math.fsum(row[j] * ks[j][d] for j in nr)
                   for d in dim)
        f = rhs(yy)
        for v in f:
            if not math.isfinite(v):
                return None
        ks.append(f)
    y5 = yy  # the last stage argument is the 5th-order result
    for v in y5:
        if not math.isfinite(v):
            return None
    err = tuple(h * math.fsum(_DP_E[j] * ks[j][d] for j in range(7))
                for d in dim)
    return y5, err, ks[6]


class _FlowSystem:
    """Precomputed constants and right-hand sides for one (n, i, c)."""

    def __init__(self, params: SigmaParams, track_t: bool):
        self.params = params
        n, i = params.n, params.i
        self.i = i
        self.c = params.c
        self.ct = params.c_tilde if params.c != 0.0 else 0.0
        self.slope = (2 * n - i - 1) / i
        self.q = (2 * n + i - 1) / i
        self.p = (2 * n - 1) / i
        self.track_t = track_t
        self.desing = i >= 2 and params.c != 0.0
        if self.desing:
            # stiffness radius: |k| below which the c k^(1-i) term dominates
            # l - 2k; equals |k_c2| whenever the root is real
            scale = (i * abs(self.ct) / (2 * n + i - 1)) ** (1.0 / i)
            self.stiff_radius = scale
            self.k_in = max(0.05 * scale, 1e-3)
        else:
            self.stiff_radius = 0.0
            self.k_in = 0.0

    def l_at(self, k: float) -> float:
        if self.c == 0.0:
            return -self.slope * k
        return self.ct / k ** (self.i - 1) - self.slope * k

    # state (alpha, k[, t]) -> (dalpha, dk[, dt]) in arc length s
    def rhs_s(self, y):
        a, k = y[0], y[1]
        l = self.l_at(k)
        da = k * k - a * a - k * l
        dk = (l - 2.0 * k) * a
        if not self.track_t:
            return (da, dk)
        return (da, dk, -k / (a * a + k * k))

    # state (alpha, k, s[, t]) -> derivatives in rescaled time tau
    def rhs_tau(self, z):
        a, k = z[0], z[1]
        i = self.i
        m = k ** (i - 1)
        da = self.p * k ** (i + 1) - m * a * a - self.ct * k
        dk = (self.ct - self.q * k ** i) * a
        if not self.track_t:
            return (da, dk, m)
        return (da, dk, m, -k ** i / (a * a + k * k))


def _signed(rhs, sign: float):
    if sign > 0:
        return rhs
    return lambda y: tuple(-v for v in rhs(y))


def _err_norm(y, y5, err, rtol, atol):
    acc = 0.0
    for d in range(len(y)):
        sc = atol + rtol * max(abs(y[d]), abs(y5[d]))
        e = err[d] / sc
        acc += e * e
    return math.sqrt(acc / len(y))


def _initial_step(y, f, max_step):
    sy = 1.0 + max(abs(v) for v in y)
    sf = 1.0 + max(abs(v) for v in f)
    return min(max_step, 0.01 * sy / sf)


class _Run:
    """Mutable record of one integration: samples, events, termination."""

    def __init__(self, sys_: _FlowSystem, cfg: IntegratorConfig,
                 direction: str, max_k_axis_events: Optional[int]):
        if direction not in ("forward", "backward"):
            raise DomainError(
                f"direction must be 'forward' or 'backward', got {direction!r}")
        self.sys = sys_
        self.cfg = cfg
        self.dir = 1.0 if direction == "forward" else -1.0
        self.max_k_axis = max_k_axis_events
        self.k_axis_seen = 0
        self.rows: List[Tuple[float, ...]] = []  # (s, alpha, k[, t])
        self.events: List[OrbitEvent] = []
        self.termination = ""

    def emit(self, s, a, k, t=None):
        if self.rows and not (self.dir * (s - self.rows[-1][0]) > 0.0):
            return
        self.rows.append((s, a, k) if t is None else (s, a, k, t))

    def event(self, kind, s, a, k, detail=""):
        self.events.append(OrbitEvent(kind, s, a, k, detail))


def _tau_sign(run: _Run, k: float) -> float:
    if run.sys.i % 2 == 1:
        return run.dir
    return run.dir * (1.0 if k > 0.0 else -1.0)


def _emit_state(run: _Run, yy, s, in_tau):
    if run.sys.track_t:
        run.emit(s, yy[0], yy[1], yy[3] if in_tau else yy[2])
    else:
        run.emit(s, yy[0], yy[1])


def _bisect_event(target, state_at, g0, g1, h, tol):
    """Locate a sign change of target over a step of size h; returns the
    substep length, refined to tol."""
    if g1 == 0.0:
        return h
    if not (g0 > 0.0 > g1 or g0 < 0.0 < g1):
        return None
    lo, hi = 0.0, h
    glo = g0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        gm = target(state_at(mid))
        if gm == 0.0:
            return mid
        if (glo > 0.0 > gm) or (glo < 0.0 < gm):
            hi = mid
        else:
            lo = mid
            glo = gm
    return hi


def _emit_axis_ladder(run: _Run, state_at, s_of, xi_star, in_tau):
    """Geometric ladder of samples approaching a terminal axis event, dense
    enough to expose the dk/ds blow-up rate."""
    for j in range(2, 42):
        xi = xi_star * (1.0 - 2.0 ** -j)
        if xi <= 0.0:
            break
        yy = state_at(xi)
        if abs(yy[1]) < 1e-11:
            break
        _emit_state(run, yy, s_of(yy, xi), in_tau)


def _handle_step(run: _Run, rhs, y0, f0, y1, f1, h, s_prev, in_tau):
    """Events, samples and termination checks for one accepted step.

    Returns alive: bool; when False run.termination is set.
    """
    sys_ = run.sys
    cfg = run.cfg
    terminal_axis = sys_.desing  # k = 0 ends the s-parametrized orbit

    def state_at(xi):
        if xi <= 0.0:
            return y0
        res = _dp_step(rhs, y0, xi, f0)
        if res is None:
            raise IntegrationError("nonfinite state during event refinement",
                                   run.rows[-1])
        return res[0]

    def s_of(yy, xi):
        return yy[2] if in_tau else s_prev + run.dir * xi

    cands = []
    a0, a1 = y0[0], y1[0]
    if (a0 > 0.0 > a1) or (a0 < 0.0 < a1) or (a1 == 0.0 and a0 != 0.0):
        cands.append(("k_axis", lambda yy: yy[0], a0, a1))
    k0v, k1v = y0[1], y1[1]
    if sys_.desing or sys_.i == 1:
        if (k0v > 0.0 > k1v) or (k0v < 0.0 < k1v) or (k1v == 0.0 and k0v != 0.0):
            cands.append(("alpha_axis", lambda yy: yy[1], k0v, k1v))
    n0, n1 = f0[0], f1[0]
    if (n0 > 0.0 > n1) or (n0 < 0.0 < n1):
        cands.append(("nullcline", lambda yy: rhs(yy)[0], n0, n1))

    located = []
    for kind, target, g0, g1 in cands:
        xi = _bisect_event(target, state_at, g0, g1, h, cfg.section_tol)
        if xi is not None:
            located.append((xi, kind))
    located.sort(key=lambda it: it[0])

    for xi, kind in located:
        ystar = state_at(xi)
        sstar = s_of(ystar, xi)
        astar, kstar = ystar[0], ystar[1]
        if kind == "nullcline":
            if abs(kstar) <= 1e-10:
                continue  # zero of the rescaled field on the axis, not a nullcline
            run.event("nullcline", sstar, astar, kstar)
            _emit_state(run, ystar, sstar, in_tau)
        elif kind == "k_axis":
            run.event("k_axis", sstar, astar, kstar)
            _emit_state(run, ystar, sstar, in_tau)
            run.k_axis_seen += 1
            if run.max_k_axis is not None and run.k_axis_seen >= run.max_k_axis:
                run.termination = "section_limit"
                run.event("truncation", sstar, astar, kstar, "section_limit")
                return False
        else:  # alpha_axis
            if terminal_axis:
                _emit_axis_ladder(run, state_at, s_of, xi, in_tau)
                ystar = state_at(xi)
                sstar = s_of(ystar, xi)
                run.event("alpha_axis", sstar, ystar[0], ystar[1], "terminal")
                _emit_state(run, ystar, sstar, in_tau)
                run.termination = "alpha_axis"
                return False
            run.event("alpha_axis", sstar, astar, kstar)
            _emit_state(run, ystar, sstar, in_tau)

    s1 = s_of(y1, h)
    _emit_state(run, y1, s1, in_tau)

    a, k = y1[0], y1[1]
    if abs(a) > cfg.box_bound or abs(k) > cfg.box_bound:
        run.termination = "box_escape"
        run.event("truncation", s1, a, k, "box_escape")
        return False
    if not in_tau:
        # axis-driven growth of dk/ds is handled by the tau chart, so it is
        # only a true blow-up when desingularization cannot absorb it
        k_driven = sys_.desing and abs(k) < sys_.stiff_radius
        if abs(f1[0]) > cfg.blowup_threshold or (
                not k_driven and abs(f1[1]) > cfg.blowup_threshold):
            run.termination = "blow_up"
            run.event("truncation", s1, a, k, "blow_up")
            return False
    if abs(s1) >= cfg.s_max:
        run.termination = "s_max"
        run.event("truncation", s1, a, k, "s_max")
        return False
    return True


def _advance(run: _Run, y, in_tau: bool) -> None:
    """Main stepping loop; handles chart changes until the run terminates."""
    sys_ = run.sys
    cfg = run.cfg
    s_now = y[2] if in_tau else 0.0

    def enter_chart(y):
        rhs = _signed(sys_.rhs_tau if in_tau else sys_.rhs_s,
                      _tau_sign(run, y[1]) if in_tau else run.dir)
        f0 = rhs(y)
        for v in f0:
            if not math.isfinite(v):
                raise IntegrationError("nonfinite field at state", run.rows[-1])
        return rhs, f0, _initial_step(y, f0, cfg.max_step)

    rhs, f0, h = enter_chart(y)
    k_gate = 2.0 * sys_.k_in
    f_enter = 1e-3 * cfg.blowup_threshold
    steps = 0
    while True:
        steps += 1
        if steps > 2_000_000:
            run.termination = "step_limit"
            run.event("truncation", s_now, y[0], y[1], "step_limit")
            return
        if not in_tau:
            room = cfg.s_max - abs(s_now)
            if room <= 1e-12:
                run.termination = "s_max"
                run.event("truncation", s_now, y[0], y[1], "s_max")
                return
            h = min(h, room)

        # one accepted embedded step
        accepted = None
        local_h = h
        for _ in range(80):
            floor = 1e-13 * max(1.0, max(abs(v) for v in y))
            if local_h < floor:
                raise IntegrationError("step size underflow", run.rows[-1])
            res = _dp_step(rhs, y, local_h, f0)
            if res is None:
                local_h *= 0.5
                continue
            y5, err, f_new = res
            enorm = _err_norm(y, y5, err, cfg.rel_tol, cfg.abs_tol)
            if enorm <= 1.0:
                accepted = (y5, f_new, local_h, enorm)
                break
            local_h *= max(0.2, 0.9 * enorm ** -0.2)
        if accepted is None:
            raise IntegrationError("no acceptable step after 80 reductions",
                                   run.rows[-1])
        y5, f_new, used_h, enorm = accepted

        alive = _handle_step(run, rhs, y, f0, y5, f_new, used_h, s_now, in_tau)
        if not alive:
            return
        y = y5
        f0 = f_new
        s_now = y[2] if in_tau else s_now + run.dir * used_h
        grow = 5.0 if enorm == 0.0 else min(5.0, 0.9 * enorm ** -0.2)
        h = min(cfg.max_step, used_h * grow)

        k_abs = abs(y[1])
        if sys_.desing and not in_tau and (
                k_abs < sys_.k_in
                or (k_abs < sys_.stiff_radius and abs(f0[1]) > f_enter)):
            k_gate = 2.0 * max(sys_.k_in, k_abs)
            y = (y[0], y[1], s_now, y[2]) if sys_.track_t else (y[0], y[1], s_now)
            in_tau = True
            rhs, f0, h = enter_chart(y)
        elif in_tau and k_abs > k_gate:
            y = (y[0], y[1], y[3]) if sys_.track_t else (y[0], y[1])
            in_tau = False
            rhs, f0, h = enter_chart(y)


def _run_flow(params: SigmaParams, start: PhasePoint, cfg: IntegratorConfig,
              direction: str, track_t: bool = False,
              max_k_axis_events: Optional[int] = None) -> _Run:
    sys_ = _FlowSystem(params, track_t)
    if sys_.desing and start.k == 0.0:
        raise SingularityError("start on the singular locus k = 0")
    run = _Run(sys_, cfg, direction, max_k_axis_events)
    in_tau = sys_.desing and abs(start.k) < sys_.k_in
    if track_t:
        run.emit(0.0, start.alpha, start.k, 0.0)
        y = (start.alpha, start.k, 0.0, 0.0) if in_tau else (start.alpha, start.k, 0.0)
    else:
        run.emit(0.0, start.alpha, start.k)
        y = (start.alpha, start.k, 0.0) if in_tau else (start.alpha, start.k)
    _advance(run, y, in_tau)
    if not run.termination:
        run.termination = "s_max"
    return run


def integrate(params: SigmaParams, start: PhasePoint, cfg: IntegratorConfig,
              direction: str = "forward",
              max_k_axis_events: Optional[int] = None) -> OrbitTrace:
    """Integrate the phase flow from start until s_max, box escape, blow-up
    or a terminal axis event; optionally stop after a number of refined
    alpha = 0 section crossings.

    Backward runs are reported with s increasing (negative s up to zero).
    """
    run = _run_flow(params, start, cfg, direction, track_t=False,
                    max_k_axis_events=max_k_axis_events)
    samples = [(r[0], r[1], r[2]) for r in run.rows]
    events = run.events
    if direction == "backward":
        samples.reverse()
        events = sorted(events, key=lambda ev: ev.s)
    return OrbitTrace(params, samples, events, run.termination)


def _near(x: float, target: float) -> bool:
    return abs(x - target) <= 1e-12 * (1.0 + abs(target))


def _band_of(params: SigmaParams, cv: CriticalValues, k0: float) -> Optional[str]:
    i, c = params.i, params.c
    if c > 0.0 and cv.k_c2_pos is not None:
        k2 = cv.k_c2_pos
        if i % 2 == 1:
            if k0 > k2:
                return "periodic"
            if i >= 2 and 0.0 < k0 < k2:
                return "arc"
            if i >= 2 and k0 < 0.0:
                return "biinf"
        else:
            if abs(k0) > k2:
                return "periodic"
            if 0.0 < abs(k0) < k2:
                return "arc"
    elif c < 0.0 and i % 2 == 1 and cv.k_c2_neg is not None:
        k2 = cv.k_c2_neg
        if k0 < k2:
            return "periodic"
        if k2 < k0 < 0.0:
            return "arc"
        if k0 > 0.0:
            return "biinf"
    return None


def _terminal_axis_alpha(trace: OrbitTrace) -> Optional[Tuple[float, float]]:
    for ev in trace.events:
        if ev.kind == "alpha_axis" and ev.detail == "terminal":
            return ev.s, ev.alpha
    return None


def classify_orbit(params: SigmaParams, start: PhasePoint,
                   cfg: Optional[IntegratorConfig] = None) -> OrbitClass:
    """Qualitative class of the orbit through start.

    Stationary points and the invariant constant-k lines are recognized
    algebraically; everything else is integrated and judged from refined
    section crossings and terminal events.
    """
    if cfg is None:
        cfg = IntegratorConfig()
    a0, k0 = start.alpha, start.k
    cv = critical_k(params)

    if _near(a0, 0.0):
        if _near(k0, 0.0) and (params.i == 1 or params.c == 0.0):
            return Stationary(0.0, 0.0)
        for r in cv.k_c1_points():
            if _near(k0, r):
                return Stationary(0.0, r)
    for r in cv.k_c2_lines():
        if _near(k0, r):
            return ConstantKLine(r)
    if params.c == 0.0 and _near(k0, 0.0):
        return ConstantKLine(0.0)

    band = _band_of(params, cv, k0)

    if band == "periodic":
        fwd = integrate(params, start, cfg, "forward", max_k_axis_events=3)
        crossings = [(ev.s, ev.k) for ev in fwd.events if ev.kind == "k_axis"]
        if _near(a0, 0.0):
            crossings.insert(0, (0.0, k0))
        for j in range(len(crossings) - 2):
            k_ref = crossings[j][1]
            tol = 10.0 * cfg.section_tol * max(1.0, abs(k_ref))
            if abs(crossings[j + 2][1] - k_ref) < tol:
                half = crossings[j + 1][0] - crossings[j][0]
                lo, hi = sorted((crossings[j][1], crossings[j + 1][1]))
                return Periodic(2.0 * half, lo, hi)
        return Truncated(fwd.termination)

    if band in ("arc", "biinf") or (band is None and params.i >= 2
                                    and params.c != 0.0):
        fwd = integrate(params, start, cfg, "forward")
        bwd = integrate(params, start, cfg, "backward")
        end_f = _terminal_axis_alpha(fwd)
        end_b = _terminal_axis_alpha(bwd)
        if end_f is not None and end_b is not None and end_f[1] * end_b[1] < 0.0:
            a_end = 0.5 * (abs(end_f[1]) + abs(end_b[1]))
            if band == "biinf":
                return ArcBiInfinite(a_end)
            return ArcToAlphaAxis(-end_b[0], end_f[0], a_end)
        if band == "biinf":
            est = _decay_limit(fwd)
            if est is not None:
                return ArcBiInfinite(est)
        return Truncated(fwd.termination)

    if params.c == 0.0 and k0 != 0.0:
        fwd = integrate(params, start, cfg, "forward")
        bwd = integrate(params, start, cfg, "backward")
        scale = max(1.0, math.hypot(a0, k0))

        def contracts(sample):
            s, a, k = sample
            return math.hypot(a, k) < 0.05 * scale

        if (fwd.termination == "s_max" and bwd.termination == "s_max"
                and contracts(fwd.samples[-1]) and contracts(bwd.samples[0])):
            return HomoclinicToOrigin()
        return Truncated(fwd.termination)

    fwd = integrate(params, start, cfg, "forward")
    return Truncated(fwd.termination)


def _decay_limit(trace: OrbitTrace) -> Optional[float]:
    """Fallback alpha-limit estimate for a run truncated at s_max while
    approaching the axis: linear extrapolation of alpha against k -> 0."""
    if trace.termination != "s_max" or len(trace.samples) < 8:
        return None
    _, a1, k1 = trace.samples[-1]
    _, a2, k2 = trace.samples[-5]
    if abs(k1) > 0.05 or k1 == k2:
        return None
    return a1 - k1 * (a2 - a1) / (k2 - k1)


def half_period(params: SigmaParams, k0: float,
                cfg: Optional[IntegratorConfig] = None) -> float:
    """Section-to-section transit time from (0, k0); the full period is
    twice this by the k-axis mirror symmetry."""
    if cfg is None:
        cfg = IntegratorConfig()
    cv = critical_k(params)
    for r in cv.k_c1_points():
        if _near(k0, r):
            raise ClassificationError(f"(0, {k0}) is a stationary point")
    if _band_of(params, cv, k0) != "periodic":
        raise ClassificationError(f"k0={k0} not in the periodic band")
    trace = integrate(params, PhasePoint(0.0, k0), cfg, "forward",
                      max_k_axis_events=1)
    for ev in trace.events:
        if ev.kind == "k_axis":
            return ev.s
    raise ClassificationError("no section return found before truncation")


def closed_form_line(params: SigmaParams, s0: float, alpha0: float,
                     s: float) -> PhasePoint:
    """Exact point of the tangent-profile solution on the invariant line
    k = k_c2 (c > 0), on the branch containing s0."""
    if params.c <= 0.0:
        raise DomainError("the invariant-line closed form needs c > 0")
    kc2 = critical_k(params).k_c2_pos
    theta0 = math.atan(alpha0 / kc2)
    phase = theta0 + kc2 * (s0 - s)
    if abs(phase) >= 0.5 * math.pi:
        raise PoleError("s outside the tangent branch containing s0")
    return PhasePoint(kc2 * math.tan(phase), kc2)


def closed_form_c0(alpha0: float, s: float) -> PhasePoint:
    """Exact point of the k = 0 solution alpha(s) = 1/(s + 1/alpha0) of the
    zero-curvature system."""
    if alpha0 == 0.0:
        raise DomainError("alpha0 must be nonzero")
    pole = -1.0 / alpha0
    if alpha0 > 0.0 and s <= pole:
        raise PoleError(f"s must exceed the pole at {pole}")
    if alpha0 < 0.0 and s >= pole:
        raise PoleError(f"s must stay below the pole at {pole}")
    return PhasePoint(1.0 / (s + 1.0 / alpha0), 0.0)
