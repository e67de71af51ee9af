"""Algebraic layer of the constrained (alpha, k) phase-plane system.

Everything here is a pure function of its arguments: the curvature
constraint sigma_{i,n} = c ties the characteristic eigenvalue l to the
umbilic eigenvalue k, and the planar vector field

    dk/ds     = (l - 2k) alpha
    dalpha/ds = k^2 - alpha^2 - k l

drives the rest of the package.  Critical k-values, nullclines, the
curvature main term and region bucketing all live here so that the
integration and conservation layers can stay free of algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .errors import DomainError, SingularityError, UndefinedCurvatureError

__all__ = [
    "SigmaParams",
    "PhasePoint",
    "CriticalValues",
    "RegionLabel",
    "binomial",
    "l_of_k",
    "dl_dk",
    "sigma_of",
    "critical_k",
    "vector_field",
    "nullcline_alpha",
    "main_term_pi",
    "d2alpha_dk2",
    "classify_region",
]

_MATCH_TOL = 1e-12  # relative tolerance for "exactly on" a critical locus


@dataclass(frozen=True)
class SigmaParams:
    """The triple (n, i, c): Heisenberg dimension index n >= 2, symmetric
    function index 1 <= i <= 2n-1, and the constant curvature value c."""

    n: int
    i: int
    c: float

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.i, int):
            raise DomainError("n and i must be integers")
        if self.n < 2:
            raise DomainError(f"need n >= 2, got n={self.n}")
        if not 1 <= self.i <= 2 * self.n - 1:
            raise DomainError(f"need 1 <= i <= 2n-1, got i={self.i}, n={self.n}")
        if not math.isfinite(self.c):
            raise DomainError("c must be finite")

    @property
    def weight(self) -> int:
        """Binomial weight C(2n-2, i-1) multiplying l k^(i-1)."""
        return binomial(2 * self.n - 2, self.i - 1)

    @property
    def c_tilde(self) -> float:
        """c normalized by the leading binomial weight."""
        return self.c / self.weight


@dataclass(frozen=True)
class PhasePoint:
    """A point (alpha, k) of the phase plane; l is derived, never stored."""

    alpha: float
    k: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.k)):
            raise DomainError("phase point coordinates must be finite")


@dataclass(frozen=True)
class CriticalValues:
    """Real roots of l - k = 0 (k_c1, stationary points) and l - 2k = 0
    (k_c2, invariant lines).  Absent fields mean the root does not exist."""

    k_c1_pos: Optional[float] = None
    k_c1_neg: Optional[float] = None
    k_c2_pos: Optional[float] = None
    k_c2_neg: Optional[float] = None

    def k_c2_lines(self) -> Tuple[float, ...]:
        return tuple(v for v in (self.k_c2_pos, self.k_c2_neg) if v is not None)

    def k_c1_points(self) -> Tuple[float, ...]:
        return tuple(v for v in (self.k_c1_pos, self.k_c1_neg) if v is not None)


class RegionLabel(Enum):
    """Deterministic phase-plane bucket keyed off the k-bands cut by the
    critical values.  Boundary k-values are assigned to the band closed on
    its side nearer the stationary structure (closed-below for positive
    bands, closed-above for the mirrored negative bands)."""

    STATIONARY_ORIGIN = "StationaryOrigin"
    STATIONARY_KC1 = "StationaryKc1"
    CONSTANT_K_LINE = "ConstantKLine"
    BAND_ABOVE_KC1 = "BandAboveKc1"
    BAND_KC2_TO_KC1 = "BandKc2ToKc1"
    BAND_ZERO_TO_KC2 = "BandZeroToKc2"
    LOWER_HALF = "LowerHalf"
    MIRROR_OF_ABOVE = "MirrorOfAbove"


def binomial(m: int, j: int) -> int:
    """Exact C(m, j) for 0 <= j <= m <= 64."""
    if not (isinstance(m, int) and isinstance(j, int)):
        raise DomainError("binomial arguments must be integers")
    if j < 0 or m < 0 or j > m:
        raise DomainError(f"binomial out of range: C({m}, {j})")
    if m > 64:
        raise DomainError(f"binomial limited to m <= 64, got m={m}")
    return math.comb(m, j)


def _check_k(params: SigmaParams, k: float) -> None:
    if k == 0.0 and params.i >= 2 and params.c != 0.0:
        raise SingularityError(
            f"l(k) singular at k=0 for i={params.i}, c={params.c}"
        )


def l_of_k(params: SigmaParams, k: float) -> float:
    """Characteristic eigenvalue l determined by sigma_{i,n} = c.

    For c = 0 the reduced linear form l = -((2n-i-1)/i) k is used, which is
    the exact limit of the general expression and valid at k = 0.
    """
    n, i = params.n, params.i
    slope = (2 * n - i - 1) / i
    if params.c == 0.0:
        return -slope * k
    _check_k(params, k)
    return params.c_tilde / k ** (i - 1) - slope * k


def dl_dk(params: SigmaParams, k: float) -> float:
    """Closed-form dl/dk (the k-derivative of l_of_k)."""
    n, i = params.n, params.i
    slope = (2 * n - i - 1) / i
    if params.c == 0.0 or i == 1:
        return -slope
    _check_k(params, k)
    return -(i - 1) * params.c_tilde / k ** i - slope


def sigma_of(n: int, i: int, l: float, k: float) -> float:
    """sigma_{i,n} of the umbilic eigenvalue pair (l, k).

    C(2n-2, i) is taken as 0 when i = 2n-1, which collapses the general
    two-term form to l k^(2n-2).
    """
    if n < 2 or not 1 <= i <= 2 * n - 1:
        raise DomainError(f"invalid (n, i) = ({n}, {i})")
    w1 = binomial(2 * n - 2, i - 1)
    w2 = 0 if i > 2 * n - 2 else binomial(2 * n - 2, i)
    return w1 * l * k ** (i - 1) + w2 * k ** i


def _real_root(value: float, i: int) -> Optional[float]:
    """Real i-th root of value: sign-split so negative bases never hit the
    fractional-power domain error."""
    if value > 0.0:
        return value ** (1.0 / i)
    if value < 0.0 and i % 2 == 1:
        return -((-value) ** (1.0 / i))
    return None


def critical_k(params: SigmaParams) -> CriticalValues:
    """Closed-form roots of l - 2k = 0 (k_c2) and l - k = 0 (k_c1).

    For c > 0: one positive root each for odd i, a mirror pair for even i.
    For c < 0: real (negative) roots exist only for odd i; for even i
    k(k - l) > 0 everywhere, so no stationary points and no invariant
    lines.  For c = 0 only the origin remains and all fields are absent.
    Every returned root is checked against its defining residual.
    """
    n, i, c = params.n, params.i, params.c
    if c == 0.0:
        return CriticalValues()
    ct = params.c_tilde
    target_c2 = i * ct / (2 * n + i - 1)
    target_c1 = i * ct / (2 * n - 1)
    r2 = _real_root(target_c2, i)
    r1 = _real_root(target_c1, i)
    vals = {}
    if r2 is not None:
        key = "k_c2_pos" if r2 > 0 else "k_c2_neg"
        vals[key] = r2
        if i % 2 == 0:
            vals["k_c2_neg"] = -r2
    if r1 is not None:
        key = "k_c1_pos" if r1 > 0 else "k_c1_neg"
        vals[key] = r1
        if i % 2 == 0:
            vals["k_c1_neg"] = -r1
    cv = CriticalValues(**vals)
    for r in cv.k_c2_lines():
        if abs(l_of_k(params, r) - 2 * r) > 1e-10 * max(1.0, abs(r)):
            raise ArithmeticError(f"k_c2 residual check failed at {r}")
    for r in cv.k_c1_points():
        if abs(l_of_k(params, r) - r) > 1e-10 * max(1.0, abs(r)):
            raise ArithmeticError(f"k_c1 residual check failed at {r}")
    return cv


def vector_field(params: SigmaParams, p: PhasePoint) -> Tuple[float, float]:
    """(dk/ds, dalpha/ds) at p, with l eliminated through the constraint."""
    l = l_of_k(params, p.k)
    dk = (l - 2.0 * p.k) * p.alpha
    dalpha = p.k * p.k - p.alpha * p.alpha - p.k * l
    return dk, dalpha


def nullcline_alpha(params: SigmaParams, k: float) -> Optional[float]:
    """Nonnegative branch of the dalpha/ds = 0 nullcline at height k.

    Returns sqrt(k(k - l)) when the radicand is >= 0, None otherwise;
    callers mirror to -alpha for the other branch.  Radicand residue below
    roundoff of the assembled terms (tangency at k_c1) counts as zero.
    """
    l = l_of_k(params, k)
    rad = k * (k - l)
    if rad < 0.0:
        if rad > -1e-13 * (1.0 + k * k + abs(k * l)):
            return 0.0
        return None
    return math.sqrt(rad)


def main_term_pi(params: SigmaParams, p: PhasePoint) -> float:
    """Main term of the phase-curve curvature expression.

    Grouped so that no negative power of k is formed unless the normalized
    curvature actually multiplies it; with c = 0 this reduces exactly to
    the quadratic-form expression of the unconstrained system.
    """
    n, i = params.n, params.i
    a, k = p.alpha, p.k
    l = l_of_k(params, k)  # also validates k against the singular locus
    st = params.c_tilde if params.c != 0.0 else 0.0
    a2 = a * a
    k2 = k * k
    aprime = k2 - a2 - k * l
    bracket1 = ((2 * n - 1) / (i * i)) * (2 * n + 3 * i - 1) * k2 * a2
    if st != 0.0:
        coef = (-4 * n + i * i - 3 * i + 2) / i
        bracket1 += coef * st * a2 * k ** (2 - i) + st * st * a2 * k ** (2 - 2 * i)
    bracket2 = ((2 * n - i - 1) / i) * a2 * a2
    if st != 0.0 and i > 1:
        bracket2 += (i - 1) * st * a2 * a2 * k ** (-i)
    return bracket1 + bracket2 + aprime * aprime


def d2alpha_dk2(params: SigmaParams, p: PhasePoint) -> float:
    """Second derivative of the orbit graph alpha(k): -Pi/((2k-l)^2 alpha^3).

    Undefined on the k-axis (alpha = 0) and on the invariant k_c2 lines
    where 2k - l vanishes.
    """
    if p.alpha == 0.0:
        raise UndefinedCurvatureError("alpha = 0: orbit graph is vertical")
    l = l_of_k(params, p.k)
    denom = 2.0 * p.k - l
    if abs(denom) <= _MATCH_TOL * (1.0 + abs(p.k)):
        raise UndefinedCurvatureError("2k - l = 0: point on an invariant line")
    pi = main_term_pi(params, p)
    return -pi / (denom * denom * p.alpha ** 3)


def _matches(x: float, target: float) -> bool:
    return abs(x - target) <= _MATCH_TOL * (1.0 + abs(target))


def classify_region(params: SigmaParams, p: PhasePoint) -> RegionLabel:
    """Deterministic phase-plane bucket for p.

    Measure-zero loci win first: exact stationary points, then the
    invariant k_c2 lines.  The remaining plane is banded by k against the
    critical values; for even i with c > 0 the negative bands collapse to
    MirrorOfAbove.  With no roots at all (c = 0, or c < 0 with even i) the
    bands degenerate: k >= 0 is BandAboveKc1 and k < 0 is LowerHalf.  For
    odd i with c < 0 the whole picture is mirrored through the alpha-axis,
    and k > 0 plays LowerHalf.
    """
    cv = critical_k(params)
    a, k = p.alpha, p.k
    if _matches(a, 0.0):
        if _matches(k, 0.0) and (params.i == 1 or params.c == 0.0):
            return RegionLabel.STATIONARY_ORIGIN
        for r in cv.k_c1_points():
            if _matches(k, r):
                return RegionLabel.STATIONARY_KC1
    for r in cv.k_c2_lines():
        if _matches(k, r):
            return RegionLabel.CONSTANT_K_LINE

    mirrored = params.c < 0.0 and params.i % 2 == 1
    if mirrored:
        k_c1 = -cv.k_c1_neg
        k_c2 = -cv.k_c2_neg
        kk = -k
    else:
        k_c1 = cv.k_c1_pos if cv.k_c1_pos is not None else 0.0
        k_c2 = cv.k_c2_pos if cv.k_c2_pos is not None else 0.0
        kk = k

    if kk >= k_c1:
        return RegionLabel.BAND_ABOVE_KC1
    if kk >= k_c2:
        return RegionLabel.BAND_KC2_TO_KC1
    if kk >= 0.0:
        return RegionLabel.BAND_ZERO_TO_KC2
    if params.i % 2 == 0 and cv.k_c2_neg is not None:
        return RegionLabel.MIRROR_OF_ABOVE
    return RegionLabel.LOWER_HALF
