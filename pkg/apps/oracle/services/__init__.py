from apps.oracle.services.component_service import ComponentService
from apps.oracle.services.contour_collapse_service import (
    ContourCollapseService,
)
from apps.oracle.services.extrapolation_service import ExtrapolationService
from apps.oracle.services.mellin_gamma_service import MellinGammaService
from apps.oracle.services.regularized_integral_service import (
    RegularizedIntegralService,
)
from apps.oracle.services.residue_function_service import (
    ResidueFunctionService,
)
from apps.oracle.services.verification_service import VerificationService

__all__ = [
    "ComponentService",
    "ContourCollapseService",
    "ExtrapolationService",
    "MellinGammaService",
    "RegularizedIntegralService",
    "ResidueFunctionService",
    "VerificationService",
]
