"""Command-line front end.

Subcommands: portrait, orbit, classify, reconstruct, pansu, selftest.
All numeric file output is deterministic: 17-significant-digit decimals,
LF newlines, fixed row ordering.  Exit codes: 0 success, 1 I/O error,
2 usage error (argparse), 3 numerical failure (diagnostic JSON on stderr).
SIGMAK_LOG in {error, warn, info, debug} controls stderr verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import __version__
from .errors import SigmaKError, SingularityError
from .model import (PhasePoint, SigmaParams, critical_k, nullcline_alpha)
from .flow import (ArcBiInfinite, ArcToAlphaAxis, ConstantKLine,
                   HomoclinicToOrigin, IntegratorConfig, OrbitClass,
                   Periodic, Stationary, Truncated, classify_orbit, integrate)
from .geometry import (ProfileCurve, pansu_profile, reconstruct_profile,
                       surface_of_revolution)
from .svgplot import render_portrait_svg

log = logging.getLogger("sigmak")

_SEED_EXCLUSION_RADIUS = 1e-3


def _fmt17(x: float) -> str:
    return format(float(x), ".17g")


@dataclass
class PortraitSpec:
    """What to draw: parameter triple, window, seed grid and overlays."""

    params: SigmaParams
    alpha_range: Tuple[float, float] = (-3.0, 3.0)
    k_range: Tuple[float, float] = (-3.0, 3.0)
    grid: int = 12
    include_nullclines: bool = True
    include_critical_lines: bool = True
    include_stationary: bool = True
    svg_path: Optional[str] = None
    csv_path: Optional[str] = None

    def __post_init__(self):
        if not self.alpha_range[0] < self.alpha_range[1]:
            raise SigmaKError("alpha_range must be nondegenerate")
        if not self.k_range[0] < self.k_range[1]:
            raise SigmaKError("k_range must be nondegenerate")
        if self.grid < 1:
            raise SigmaKError("grid must be >= 1")


@dataclass
class PortraitData:
    spec: PortraitSpec
    seeds: List[Tuple[int, float, float]] = field(default_factory=list)
    excluded: List[Tuple[float, float, str]] = field(default_factory=list)
    classes: List[Tuple[int, str]] = field(default_factory=list)
    orbits: List[Tuple[str, List[Tuple[float, float]]]] = field(default_factory=list)
    traces: List[Tuple[int, str, List[Tuple[float, float, float]]]] = field(default_factory=list)
    nullclines: List[List[Tuple[float, float]]] = field(default_factory=list)
    critical_lines: List[float] = field(default_factory=list)
    stationary_points: List[Tuple[float, float]] = field(default_factory=list)

    def class_counts(self) -> dict:
        counts: dict = {}
        for _, kind in self.classes:
            counts[kind] = counts.get(kind, 0) + 1
        return dict(sorted(counts.items()))


def _nullcline_polylines(params: SigmaParams, k_range, n_pts=801):
    lo, hi = k_range
    branches = ([], [])
    polylines = []
    for j in range(n_pts):
        k = lo + (hi - lo) * j / (n_pts - 1)
        try:
            a = nullcline_alpha(params, k)
        except SingularityError:
            a = None
        for sign, branch in zip((1.0, -1.0), branches):
            if a is None:
                if len(branch) > 1:
                    polylines.append(list(branch))
                branch.clear()
            else:
                branch.append((sign * a, k))
    for branch in branches:
        if len(branch) > 1:
            polylines.append(list(branch))
    return polylines


def compute_portrait(spec: PortraitSpec, cfg: IntegratorConfig) -> PortraitData:
    """Seed a grid of orbits, classify each, and gather the overlays."""
    params = spec.params
    data = PortraitData(spec)
    cv = critical_k(params)
    if spec.include_critical_lines:
        data.critical_lines = list(cv.k_c2_lines())
    if spec.include_stationary:
        pts = [(0.0, r) for r in cv.k_c1_points()]
        if params.i == 1 or params.c == 0.0:
            pts.append((0.0, 0.0))
        data.stationary_points = pts
    if spec.include_nullclines:
        data.nullclines = _nullcline_polylines(params, spec.k_range)

    a0, a1 = spec.alpha_range
    k0, k1 = spec.k_range
    g = spec.grid
    da, dk = (a1 - a0) / g, (k1 - k0) / g
    stationary = list(data.stationary_points) or [
        (0.0, r) for r in cv.k_c1_points()]
    idx = 0
    for jk in range(g):
        for ja in range(g):
            alpha = a0 + (ja + 0.5) * da
            k = k0 + (jk + 0.5) * dk
            idx += 1
            seed_id = idx - 1
            if params.i >= 2 and params.c != 0.0 and abs(k) < _SEED_EXCLUSION_RADIUS:
                data.excluded.append((alpha, k, "k-axis singular locus"))
                continue
            if any(math.hypot(alpha - p[0], k - p[1]) < _SEED_EXCLUSION_RADIUS
                   for p in stationary):
                data.excluded.append((alpha, k, "stationary point"))
                continue
            data.seeds.append((seed_id, alpha, k))

    # classification wants section accuracy; drawing can run lighter
    cfg_classify = IntegratorConfig(
        rel_tol=min(cfg.rel_tol, 1e-10), abs_tol=min(cfg.abs_tol, 1e-12),
        max_step=min(cfg.max_step, 0.01), s_max=cfg.s_max,
        box_bound=cfg.box_bound, blowup_threshold=cfg.blowup_threshold,
        section_tol=cfg.section_tol)
    for seed_id, alpha, k in data.seeds:
        start = PhasePoint(alpha, k)
        cls = classify_orbit(params, start, cfg_classify)
        data.classes.append((seed_id, cls.kind))
        if isinstance(cls, Stationary):
            data.traces.append((seed_id, "forward", [(0.0, alpha, k)]))
            data.orbits.append((cls.kind, [(alpha, k)]))
            continue
        cfg_draw = cfg
        if isinstance(cls, Periodic):
            cfg_draw = IntegratorConfig(
                rel_tol=cfg.rel_tol, abs_tol=cfg.abs_tol,
                max_step=cfg.max_step,
                s_max=min(cfg.s_max, 0.65 * cls.period),
                box_bound=cfg.box_bound,
                blowup_threshold=cfg.blowup_threshold,
                section_tol=cfg.section_tol)
        bwd = integrate(params, start, cfg_draw, "backward")
        fwd = integrate(params, start, cfg_draw, "forward")
        data.traces.append((seed_id, "backward", bwd.samples))
        data.traces.append((seed_id, "forward", fwd.samples))
        pts = [(a, kk) for _, a, kk in bwd.samples[:-1]]
        pts += [(a, kk) for _, a, kk in fwd.samples]
        data.orbits.append((cls.kind, pts))
        log.debug("seed %d (%g, %g) -> %s", seed_id, alpha, k, cls.kind)
    return data


def portrait_svg_text(data: PortraitData) -> str:
    spec = data.spec
    p = spec.params
    title = (f"sigma-{p.i} curvature, n={p.n}, c={_fmt17(p.c)} "
             f"(alpha,k) portrait")
    return render_portrait_svg(spec.alpha_range, spec.k_range, title,
                               data.orbits, data.nullclines,
                               data.critical_lines, data.stationary_points)


def portrait_csv_text(data: PortraitData) -> str:
    spec = data.spec
    p = spec.params
    lines = [
        f"# sigmak portrait n={p.n} i={p.i} c={_fmt17(p.c)}",
        f"# alpha_range={_fmt17(spec.alpha_range[0])}:{_fmt17(spec.alpha_range[1])}"
        f" k_range={_fmt17(spec.k_range[0])}:{_fmt17(spec.k_range[1])}"
        f" grid={spec.grid}",
    ]
    if data.excluded:
        excl = "; ".join(f"({_fmt17(a)},{_fmt17(k)}) {why}"
                         for a, k, why in data.excluded)
        lines.append(f"# excluded_seeds: {excl}")
    else:
        lines.append("# excluded_seeds: none")
    lines.append("seed,direction,s,alpha,k")
    for seed_id, direction, samples in data.traces:
        for s, a, k in samples:
            lines.append(f"{seed_id},{direction},{_fmt17(s)},{_fmt17(a)},{_fmt17(k)}")
    return "\n".join(lines) + "\n"


def trace_csv_text(samples: Sequence[Tuple[float, float, float]]) -> str:
    lines = ["s,alpha,k"]
    for s, a, k in samples:
        lines.append(f"{_fmt17(s)},{_fmt17(a)},{_fmt17(k)}")
    return "\n".join(lines) + "\n"


def profile_csv_text(profile: ProfileCurve) -> str:
    lines = ["s,r,t,alpha,k"]
    for s, r, t, a, k in profile.samples:
        lines.append(f"{_fmt17(s)},{_fmt17(r)},{_fmt17(t)},{_fmt17(a)},{_fmt17(k)}")
    return "\n".join(lines) + "\n"


def obj_text(mesh) -> str:
    lines = []
    for x, y, z in mesh.vertices:
        lines.append(f"v {_fmt17(x)} {_fmt17(y)} {_fmt17(z)}")
    for a, b, c in mesh.faces:
        lines.append(f"f {a + 1} {b + 1} {c + 1}")
    return "\n".join(lines) + "\n"


def class_json(cls: OrbitClass) -> str:
    if isinstance(cls, Stationary):
        payload = {"class": cls.kind, "alpha": cls.alpha, "k": cls.k}
    elif isinstance(cls, ConstantKLine):
        payload = {"class": cls.kind, "k": cls.k_value}
    elif isinstance(cls, Periodic):
        payload = {"class": cls.kind, "period": cls.period,
                   "k_min": cls.k_min, "k_max": cls.k_max}
    elif isinstance(cls, ArcToAlphaAxis):
        payload = {"class": cls.kind, "s_minus": cls.s_minus,
                   "s_plus": cls.s_plus, "alpha_end": cls.alpha_end}
    elif isinstance(cls, ArcBiInfinite):
        payload = {"class": cls.kind, "alpha_limit": cls.alpha_limit}
    elif isinstance(cls, HomoclinicToOrigin):
        payload = {"class": cls.kind}
    elif isinstance(cls, Truncated):
        payload = {"class": cls.kind, "reason": cls.reason}
    else:
        payload = {"class": cls.kind}
    return json.dumps(payload)


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def _params_from(args) -> SigmaParams:
    return SigmaParams(args.n, args.i, args.c)


def _config_from(args, rel_tol, abs_tol, max_step, s_max) -> IntegratorConfig:
    return IntegratorConfig(
        rel_tol=args.rtol if args.rtol is not None else rel_tol,
        abs_tol=args.atol if args.atol is not None else abs_tol,
        max_step=args.max_step if args.max_step is not None else max_step,
        s_max=args.s_max if args.s_max is not None else s_max,
    )


def cmd_portrait(args) -> int:
    params = _params_from(args)
    cfg = _config_from(args, 1e-8, 1e-10, 0.05, 40.0)
    spec = PortraitSpec(
        params,
        alpha_range=tuple(args.alpha_range),
        k_range=tuple(args.k_range),
        grid=args.grid,
        include_nullclines=not args.no_nullclines,
        include_critical_lines=not args.no_critical_lines,
        include_stationary=not args.no_stationary,
        svg_path=args.out,
        csv_path=args.csv,
    )
    log.info("computing portrait n=%d i=%d c=%g grid=%d",
             params.n, params.i, params.c, spec.grid)
    data = compute_portrait(spec, cfg)
    _write_text(args.out, portrait_svg_text(data))
    if args.csv:
        _write_text(args.csv, portrait_csv_text(data))
    if args.png:
        from .figures import portrait_png
        p = params
        portrait_png(args.png, spec.alpha_range, spec.k_range,
                     f"sigma-{p.i}, n={p.n}, c={p.c:g}", data.orbits,
                     data.nullclines, data.critical_lines,
                     data.stationary_points)
    summary = {
        "svg": args.out,
        "seeds": len(data.seeds),
        "excluded": len(data.excluded),
        "class_counts": data.class_counts(),
    }
    print(json.dumps(summary))
    return 0


def cmd_orbit(args) -> int:
    params = _params_from(args)
    cfg = _config_from(args, 1e-10, 1e-12, 0.01, 200.0)
    start = PhasePoint(args.alpha0, args.k0)
    if args.direction == "both":
        bwd = integrate(params, start, cfg, "backward")
        fwd = integrate(params, start, cfg, "forward")
        samples = bwd.samples[:-1] + fwd.samples
    else:
        samples = integrate(params, start, cfg, args.direction).samples
    _write_text(args.out, trace_csv_text(samples))
    print(json.dumps({"out": args.out, "samples": len(samples)}))
    return 0


def cmd_classify(args) -> int:
    params = _params_from(args)
    cfg = _config_from(args, 1e-10, 1e-12, 0.01, 200.0)
    cls = classify_orbit(params, PhasePoint(args.alpha0, args.k0), cfg)
    print(class_json(cls))
    return 0


def cmd_reconstruct(args) -> int:
    params = _params_from(args)
    cfg = _config_from(args, 1e-10, 1e-12, 0.01, 200.0)
    profile = reconstruct_profile(params, PhasePoint(args.alpha0, args.k0), cfg)
    _write_text(args.out, profile_csv_text(profile))
    written = {"out": args.out, "samples": len(profile.samples)}
    if args.mesh:
        mesh = surface_of_revolution(profile, args.segments)
        _write_text(args.mesh, obj_text(mesh))
        written["mesh"] = args.mesh
        written["vertices"] = len(mesh.vertices)
        written["faces"] = len(mesh.faces)
    if args.png:
        from .figures import profile_png
        profile_png(args.png, profile,
                    f"profile n={params.n} i={params.i} c={params.c:g}")
        written["png"] = args.png
    print(json.dumps(written))
    return 0


def cmd_pansu(args) -> int:
    lam = args.lam
    if lam <= 0.0:
        raise SigmaKError("--lambda must be positive")
    n = args.samples
    if n < 2:
        raise SigmaKError("--samples must be >= 2")
    lines = ["z,f"]
    for j in range(n):
        z = (j / (n - 1)) / lam
        lines.append(f"{_fmt17(z)},{_fmt17(pansu_profile(lam, z))}")
    text = "\n".join(lines) + "\n"
    if args.out:
        _write_text(args.out, text)
        print(json.dumps({"out": args.out, "samples": n}))
    else:
        sys.stdout.write(text)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest
    return run_selftest()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sigmak",
        description="Phase-plane analysis and profile reconstruction for "
                    "umbilic constant sigma-k curvature hypersurfaces.")
    p.add_argument("--version", action="version", version=f"sigmak {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_params(sp):
        sp.add_argument("--n", type=int, required=True,
                        help="Heisenberg dimension index (n >= 2)")
        sp.add_argument("--i", type=int, required=True,
                        help="symmetric function index (1 <= i <= 2n-1)")
        sp.add_argument("--c", type=float, required=True,
                        help="constant curvature value")

    def add_integration(sp):
        sp.add_argument("--rtol", type=float, default=None)
        sp.add_argument("--atol", type=float, default=None)
        sp.add_argument("--s-max", dest="s_max", type=float, default=None)
        sp.add_argument("--max-step", dest="max_step", type=float, default=None)

    sp = sub.add_parser("portrait", help="render a phase portrait (SVG+CSV)")
    add_params(sp)
    add_integration(sp)
    sp.add_argument("--alpha-range", nargs=2, type=float, default=[-3.0, 3.0],
                    metavar=("LO", "HI"))
    sp.add_argument("--k-range", nargs=2, type=float, default=[-3.0, 3.0],
                    metavar=("LO", "HI"))
    sp.add_argument("--grid", type=int, default=12,
                    help="seeds per axis (default 12)")
    sp.add_argument("--no-nullclines", action="store_true")
    sp.add_argument("--no-critical-lines", action="store_true")
    sp.add_argument("--no-stationary", action="store_true")
    sp.add_argument("--out", required=True, help="output SVG path")
    sp.add_argument("--csv", default=None, help="optional trace CSV path")
    sp.add_argument("--png", default=None, help="optional matplotlib PNG path")
    sp.set_defaults(func=cmd_portrait)

    sp = sub.add_parser("orbit", help="integrate one orbit to CSV")
    add_params(sp)
    add_integration(sp)
    sp.add_argument("--alpha0", type=float, required=True)
    sp.add_argument("--k0", type=float, required=True)
    sp.add_argument("--direction", choices=["forward", "backward", "both"],
                    default="both")
    sp.add_argument("--out", required=True, help="output CSV path")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("classify", help="qualitative class of one orbit (JSON)")
    add_params(sp)
    add_integration(sp)
    sp.add_argument("--alpha0", type=float, required=True)
    sp.add_argument("--k0", type=float, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("reconstruct",
                        help="reconstruct the hypersurface profile (CSV/OBJ)")
    add_params(sp)
    add_integration(sp)
    sp.add_argument("--alpha0", type=float, required=True)
    sp.add_argument("--k0", type=float, required=True)
    sp.add_argument("--out", required=True, help="profile CSV path")
    sp.add_argument("--mesh", default=None, help="optional OBJ mesh path")
    sp.add_argument("--segments", type=int, default=64)
    sp.add_argument("--png", default=None, help="optional matplotlib PNG path")
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("pansu", help="sample the model-sphere profile")
    sp.add_argument("--lambda", dest="lam", type=float, required=True)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--out", default=None, help="CSV path (stdout if absent)")
    sp.set_defaults(func=cmd_pansu)

    sp = sub.add_parser("selftest", help="run the invariant suites")
    sp.set_defaults(func=cmd_selftest)
    return p


def _configure_logging() -> None:
    level_name = os.environ.get("SIGMAK_LOG", "warn").lower()
    levels = {"error": logging.ERROR, "warn": logging.WARNING,
              "info": logging.INFO, "debug": logging.DEBUG}
    logging.basicConfig(stream=sys.stderr,
                        level=levels.get(level_name, logging.WARNING),
                        format="sigmak %(levelname)s: %(message)s")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging()
    try:
        return args.func(args)
    except SigmaKError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"sigmak: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
