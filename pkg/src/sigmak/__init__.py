"""Numerical phase-plane toolkit for umbilic hypersurfaces of constant
sigma-k curvature in the Heisenberg group: vector-field algebra, orbit
integration and classification, conserved first integrals, and
rotationally invariant profile reconstruction."""

from .errors import (ClassificationError, DegenerateError, DomainError,
                     InapplicableError, IntegrationError, PoleError,
                     RegionError, SigmaKError, SingularityError,
                     UndefinedCurvatureError)
from .model import (CriticalValues, PhasePoint, RegionLabel, SigmaParams,
                    binomial, classify_region, critical_k, d2alpha_dk2,
                    dl_dk, l_of_k, main_term_pi, nullcline_alpha, sigma_of,
                    vector_field)
from .flow import (ArcBiInfinite, ArcToAlphaAxis, ConstantKLine,
                   HomoclinicToOrigin, IntegratorConfig, OrbitClass,
                   OrbitEvent, OrbitTrace, Periodic, Stationary, Truncated,
                   classify_orbit, closed_form_c0, closed_form_line,
                   half_period, integrate)
from .conserved import FirstIntegral, alpha_from_k, energy, g_of_k, potential
from .geometry import (ProfileCurve, SurfaceMesh, cap_smoothness_report,
                       center_track, leaf_radius, pansu_profile,
                       reconstruct_profile, surface_of_revolution)

__version__ = "0.1.0"

__all__ = [
    "SigmaKError", "DomainError", "SingularityError", "RegionError",
    "DegenerateError", "ClassificationError", "PoleError",
    "InapplicableError", "IntegrationError", "UndefinedCurvatureError",
    "SigmaParams", "PhasePoint", "CriticalValues", "RegionLabel",
    "binomial", "l_of_k", "dl_dk", "sigma_of", "critical_k",
    "vector_field", "nullcline_alpha", "main_term_pi", "d2alpha_dk2",
    "classify_region",
    "IntegratorConfig", "OrbitEvent", "OrbitTrace", "OrbitClass",
    "Stationary", "ConstantKLine", "Periodic", "ArcToAlphaAxis",
    "ArcBiInfinite", "HomoclinicToOrigin", "Truncated",
    "integrate", "classify_orbit", "half_period", "closed_form_line",
    "closed_form_c0",
    "FirstIntegral", "g_of_k", "potential", "energy", "alpha_from_k",
    "ProfileCurve", "SurfaceMesh", "pansu_profile", "leaf_radius",
    "reconstruct_profile", "center_track", "cap_smoothness_report",
    "surface_of_revolution",
    "__version__",
]
