"""Rotationally invariant profiles reconstructed from phase orbits.

A phase point (alpha, k) with alpha^2 + k^2 > 0 carries a spherical leaf
of radius r = 1/sqrt(alpha^2 + k^2) centered on the rotation axis, and the
axial height of that center obeys dt/ds = -k/(alpha^2 + k^2).  Both follow
from the leaf identities; note that along the flow

    alpha alpha' + k k' = -alpha (alpha^2 + k^2)

identically, so dr/ds = alpha r and the profile (r(s), t(s)) is smooth in
s straight through the alpha = 0 equator where the graph description
t = g(r) degenerates.  The graph slope, where defined, is

    g'(r) = dt/dr = -k r / alpha,

the sign branch fixed by agreement with the model-sphere profile on the
invariant line.  Mesh export flattens the group's twisted geometry into a
Euclidean surface of revolution: the silhouette is faithful, the ambient
metric is not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import DegenerateError, DomainError, InapplicableError
from .flow import IntegratorConfig, OrbitTrace, _run_flow
from .model import PhasePoint, SigmaParams, vector_field

__all__ = [
    "ProfileCurve",
    "SurfaceMesh",
    "pansu_profile",
    "leaf_radius",
    "reconstruct_profile",
    "center_track",
    "cap_smoothness_report",
    "surface_of_revolution",
]

_POLE_RADIUS = 1e-9


@dataclass
class ProfileCurve:
    """Sampled profile (s, r, t, alpha, k), s strictly increasing, vertical
    gauge t = 0 at the start point of the reconstruction."""

    params: SigmaParams
    samples: List[Tuple[float, float, float, float, float]]
    termination_backward: str
    termination_forward: str

    def radii(self) -> List[float]:
        return [row[1] for row in self.samples]


@dataclass
class SurfaceMesh:
    vertices: List[Tuple[float, float, float]]
    faces: List[Tuple[int, int, int]]


def pansu_profile(lam: float, z_abs: float) -> float:
    """Height profile f of the model sphere of parameter lam > 0 at planar
    radius z_abs, monotone decreasing on [0, 1/lam]."""
    if lam <= 0.0:
        raise DomainError("lam must be positive")
    x = lam * z_abs
    if z_abs < 0.0 or x > 1.0 + 1e-12:
        raise DomainError(f"z_abs outside [0, 1/lam], got {z_abs}")
    x = min(x, 1.0)  # tolerate rim roundoff only
    return (x * math.sqrt(1.0 - x * x) + math.acos(x)) / (2.0 * lam * lam)


def leaf_radius(p: PhasePoint) -> float:
    """Radius 1/sqrt(alpha^2 + k^2) of the leaf through p."""
    r = math.hypot(p.alpha, p.k)
    if r == 0.0:
        raise DegenerateError("alpha = k = 0 carries no leaf (product branch)")
    return 1.0 / r


def reconstruct_profile(params: SigmaParams, start: PhasePoint,
                        cfg: Optional[IntegratorConfig] = None) -> ProfileCurve:
    """Profile curve of the hypersurface swept by the orbit through start,
    integrated in both directions with t gauged to 0 at start."""
    if cfg is None:
        cfg = IntegratorConfig()
    if start.alpha == 0.0 and start.k == 0.0:
        raise DegenerateError(
            "alpha = k = 0 is the degenerate plane-times-line case")
    bwd = _run_flow(params, start, cfg, "backward", track_t=True)
    fwd = _run_flow(params, start, cfg, "forward", track_t=True)
    rows = list(reversed(bwd.rows))[:-1] + fwd.rows
    samples = []
    last_s = None
    for s, a, k, t in rows:
        if last_s is not None and not s > last_s:
            continue
        samples.append((s, 1.0 / math.hypot(a, k), t, a, k))
        last_s = s
    return ProfileCurve(params, samples, bwd.termination, fwd.termination)


def center_track(params: SigmaParams,
                 trace: OrbitTrace) -> List[Tuple[float, float]]:
    """Cumulative axial drift of the leaf centers along a trace.

    Derivative-corrected trapezoid on the adaptive samples; the correction
    is dropped on intervals touching the singular axis, where the spacing
    produced by the event ladder is already tiny.
    """
    phi: List[float] = []
    dphi: List[Optional[float]] = []
    for s, a, k in trace.samples:
        n2 = a * a + k * k
        if n2 == 0.0:
            raise DegenerateError("trace passes through alpha = k = 0")
        phi.append(-k / n2)
        try:
            dk, da = vector_field(params, PhasePoint(a, k))
        except Exception:
            dphi.append(None)
            continue
        w = 1.0 / n2
        dw = -2.0 * (a * da + k * dk) * w * w
        val = -dk * w - k * dw
        dphi.append(val if abs(val) <= 1e6 else None)

    out = [(trace.samples[0][0], 0.0)]
    acc = 0.0
    for j in range(1, len(trace.samples)):
        s0 = trace.samples[j - 1][0]
        s1 = trace.samples[j][0]
        h = s1 - s0
        seg = 0.5 * h * (phi[j - 1] + phi[j])
        if dphi[j - 1] is not None and dphi[j] is not None:
            seg += h * h / 12.0 * (dphi[j - 1] - dphi[j])
        acc += seg
        out.append((s1, acc))
    return out


def _neville_to_zero(pts: List[Tuple[float, float]]) -> float:
    xs = [p[0] for p in pts]
    vals = [p[1] for p in pts]
    m = len(pts)
    for level in range(1, m):
        nxt = []
        for j in range(m - level):
            x0, x1 = xs[j], xs[j + level]
            nxt.append((x1 * vals[j] - x0 * vals[j + 1]) / (x1 - x0))
        vals = nxt
    return vals[0]


def cap_smoothness_report(profile: ProfileCurve,
                          end: str = "auto") -> Tuple[float, float]:
    """Extrapolated limits of g'(r) and g'(r)/r at one r -> 0 end.

    end: 'start', 'end', or 'auto' (the side with the smaller terminal r).
    A C1 cap needs the first limit ~ 0; a C2 cap additionally the second.
    """
    if end not in ("auto", "start", "end"):
        raise DomainError("end must be 'auto', 'start' or 'end'")
    radii = profile.radii()
    if not radii:
        raise InapplicableError("empty profile")
    r_max = max(radii)
    if end == "auto":
        end = "start" if radii[0] <= radii[-1] else "end"
    rows = profile.samples if end == "end" else list(reversed(profile.samples))
    r_term = rows[-1][1]
    if r_term > 0.05 * r_max:
        raise InapplicableError(
            f"profile does not approach the axis at this end: terminal r "
            f"{r_term:.3g} > 5% of max r {r_max:.3g}")

    # three windows at geometrically spread radii near the terminal sample
    targets = (r_term * 1.0, r_term * 2.0, r_term * 4.0)
    picked = []
    used = set()
    for tgt in targets:
        best = None
        best_d = math.inf
        for idx in range(len(rows) - 1, max(-1, len(rows) - 4000), -1):
            s, r, t, a, k = rows[idx]
            if a == 0.0 or idx in used:
                continue
            d = abs(r - tgt)
            if d < best_d:
                best_d = d
                best = idx
        if best is None:
            raise InapplicableError("too few usable samples near the cap")
        used.add(best)
        picked.append(rows[best])
    pts_g1 = []
    pts_g2 = []
    for s, r, t, a, k in picked:
        pts_g1.append((r, -k * r / a))
        pts_g2.append((r, -k / a))
    rs = sorted(p[0] for p in pts_g1)
    if len(set(rs)) < 3 or rs[2] < 1.5 * rs[0]:
        raise InapplicableError(
            "cap windows lack radial spread; end is not a resolved cap")
    return _neville_to_zero(pts_g1), _neville_to_zero(pts_g2)


def surface_of_revolution(profile: ProfileCurve,
                          segments: int) -> SurfaceMesh:
    """Triangulated revolution of (r, t) about the t-axis.

    Rings share the seam (no duplicated vertices); samples with r below
    1e-9 collapse to pole vertices.
    """
    if segments < 3:
        raise DomainError("segments must be >= 3")
    if len(profile.samples) < 2:
        raise DomainError("need at least 2 profile samples")
    if all(row[1] < _POLE_RADIUS for row in profile.samples):
        raise DegenerateError("all radii are zero; nothing to revolve")

    verts: List[Tuple[float, float, float]] = []
    rows: List[Tuple[str, int]] = []
    two_pi = 2.0 * math.pi
    for s, r, t, a, k in profile.samples:
        if r < _POLE_RADIUS:
            rows.append(("pole", len(verts)))
            verts.append((0.0, 0.0, t))
        else:
            base = len(verts)
            rows.append(("ring", base))
            for m in range(segments):
                ang = two_pi * m / segments
                verts.append((r * math.cos(ang), r * math.sin(ang), t))

    faces: List[Tuple[int, int, int]] = []
    for (kind0, b0), (kind1, b1) in zip(rows, rows[1:]):
        if kind0 == "pole" and kind1 == "pole":
            continue
        if kind0 == "pole":
            for m in range(segments):
                faces.append((b0, b1 + m, b1 + (m + 1) % segments))
        elif kind1 == "pole":
            for m in range(segments):
                faces.append((b0 + m, b1, b0 + (m + 1) % segments))
        else:
            for m in range(segments):
                mn = (m + 1) % segments
                faces.append((b0 + m, b1 + m, b0 + mn))
                faces.append((b0 + mn, b1 + m, b1 + mn))
    return SurfaceMesh(verts, faces)
