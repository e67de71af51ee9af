"""Region-local first integral of the phase flow.

An integrating factor f(k) = g(k)/(2k - l) turns the orbit 1-form into an
exact differential.  The factor g has the closed form

    g(k) = |k^i - A|^(-2/(2n+i-1)),   A = (i/(2n+i-1)) c / C(2n-2, i-1)

(normalization constant fixed to 1), and the conserved energy is

    E = V(k) + alpha^2 g(k) / 2,   V(k) = int_{k_ref}^{k} g (kappa^2 - kappa l)/(2 kappa - l) dkappa.

f blows up non-integrably on the k_c2 locus (k^i = A) and l blows up at
k = 0, so E is only defined on the open k-interval between those loci that
contains k_ref.  Evaluations within 1e-6 of a boundary are refused rather
than extrapolated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .errors import RegionError, SingularityError
from .model import PhasePoint, SigmaParams, critical_k, l_of_k

__all__ = ["FirstIntegral", "g_of_k", "potential", "energy", "alpha_from_k"]

_BOUNDARY_MARGIN = 1e-6
_QUAD_TOL = 1e-12

# 15-point Kronrod nodes with Gauss-7 and Kronrod-15 weights on [-1, 1].
_GK15 = (
    (0.991455371120813, 0.0, 0.022935322010529),
    (-0.991455371120813, 0.0, 0.022935322010529),
    (0.949107912342759, 0.129484966168870, 0.063092092629979),
    (-0.949107912342759, 0.129484966168870, 0.063092092629979),
    (0.864864423359769, 0.0, 0.104790010322250),
    (-0.864864423359769, 0.0, 0.104790010322250),
    (0.741531185599394, 0.279705391489277, 0.140653259715525),
    (-0.741531185599394, 0.279705391489277, 0.140653259715525),
    (0.586087235467691, 0.0, 0.169004726639267),
    (-0.586087235467691, 0.0, 0.169004726639267),
    (0.405845151377397, 0.381830050505119, 0.190350578064785),
    (-0.405845151377397, 0.381830050505119, 0.190350578064785),
    (0.207784955007898, 0.0, 0.204432940075298),
    (-0.207784955007898, 0.0, 0.204432940075298),
    (0.0, 0.417959183673469, 0.209482141084728),
)


def _gk15_panel(f: Callable[[float], float], a: float, b: float) -> Tuple[float, float]:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    g7 = 0.0
    k15 = 0.0
    for x, wg, wk in _GK15:
        fx = f(mid + half * x)
        g7 += wg * fx
        k15 += wk * fx
    return half * k15, abs(half) * (200.0 * abs(g7 - k15)) ** 1.5


def _adaptive_quad(f: Callable[[float], float], a: float, b: float,
                   tol: float, depth: int = 0) -> float:
    """Adaptive Gauss-Kronrod with fixed left-to-right subdivision order."""
    val, err = _gk15_panel(f, a, b)
    if err <= tol or depth >= 48:
        return val
    mid = 0.5 * (a + b)
    return (_adaptive_quad(f, a, mid, 0.5 * tol, depth + 1)
            + _adaptive_quad(f, mid, b, 0.5 * tol, depth + 1))


def g_of_k(params: SigmaParams, k: float) -> float:
    """Integrating-factor kernel g(k); positive wherever defined."""
    n, i = params.n, params.i
    a_loc = i * params.c_tilde / (2 * n + i - 1)
    base = k ** i - a_loc
    if base == 0.0:
        raise SingularityError("g(k) singular on the k_c2 locus")
    return abs(base) ** (-2.0 / (2 * n + i - 1))


def _region_boundaries(params: SigmaParams) -> List[float]:
    cuts = {0.0}
    cv = critical_k(params)
    for r in cv.k_c2_lines():
        cuts.add(r)
    return sorted(cuts)


def _region_of(params: SigmaParams, k: float) -> Tuple[float, float]:
    cuts = _region_boundaries(params)
    lo = -math.inf
    hi = math.inf
    for cut in cuts:
        if cut <= k:
            lo = cut
        if cut > k and hi == math.inf:
            hi = cut
    return lo, hi


@dataclass
class FirstIntegral:
    """Conserved-energy evaluator anchored at k_ref.

    The potential V is quadrature from k_ref; repeated arguments hit a
    memo dict, which is safe to fill concurrently because recomputation is
    idempotent and exact.
    """

    params: SigmaParams
    k_ref: float
    region: Tuple[float, float] = field(init=False)
    _v_cache: Dict[float, float] = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self):
        lo, hi = _region_of(self.params, self.k_ref)
        if (self.k_ref - lo) <= _BOUNDARY_MARGIN or (hi - self.k_ref) <= _BOUNDARY_MARGIN:
            raise RegionError(
                f"k_ref={self.k_ref} within {_BOUNDARY_MARGIN} of region boundary ({lo}, {hi})"
            )
        self.region = (lo, hi)

    @property
    def region_id(self) -> str:
        return f"({self.region[0]:g},{self.region[1]:g})"

    def _check_inside(self, k: float) -> None:
        lo, hi = self.region
        if not (k - lo > _BOUNDARY_MARGIN and hi - k > _BOUNDARY_MARGIN):
            raise RegionError(
                f"k={k} outside safe interior of region ({lo}, {hi})"
            )

    def _integrand(self, kappa: float) -> float:
        l = l_of_k(self.params, kappa)
        return g_of_k(self.params, kappa) * (kappa * kappa - kappa * l) / (2.0 * kappa - l)


def potential(fi: FirstIntegral, k: float) -> float:
    """V(k): quadrature of the exact-form kernel from k_ref to k."""
    fi._check_inside(k)
    if k == fi.k_ref:
        return 0.0
    cached = fi._v_cache.get(k)
    if cached is not None:
        return cached
    if k > fi.k_ref:
        val = _adaptive_quad(fi._integrand, fi.k_ref, k, _QUAD_TOL)
    else:
        val = -_adaptive_quad(fi._integrand, k, fi.k_ref, _QUAD_TOL)
    fi._v_cache[k] = val
    return val


def energy(fi: FirstIntegral, p: PhasePoint) -> float:
    """E = V(k) + alpha^2 g(k)/2, constant along orbits inside the region."""
    return potential(fi, p.k) + 0.5 * p.alpha * p.alpha * g_of_k(fi.params, p.k)


def alpha_from_k(fi: FirstIntegral, k: float, e: float) -> Optional[float]:
    """Nonnegative alpha with energy(alpha, k) = e, None when the level set
    does not reach this k."""
    rad = 2.0 * (e - potential(fi, k)) / g_of_k(fi.params, k)
    if rad < 0.0:
        return None
    return math.sqrt(rad)
