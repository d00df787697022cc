from apps.cones.services.cone_service import ConeService
from apps.cones.services.fourier_motzkin_service import FourierMotzkinService

__all__ = [
    "ConeService",
    "FourierMotzkinService",
]
