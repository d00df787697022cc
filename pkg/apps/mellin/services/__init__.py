from apps.mellin.services.gamma_service import GammaService
from apps.mellin.services.mellin_barnes_service import MellinBarnesService

__all__ = [
    "GammaService",
    "MellinBarnesService",
]
