from apps.linalg.services.exact_linalg_service import ExactLinalgService

__all__ = [
    "ExactLinalgService",
]
