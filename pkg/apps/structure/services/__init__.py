from apps.structure.services.structure_service import StructureService
from apps.structure.services.term_render_service import TermRenderService

__all__ = [
    "StructureService",
    "TermRenderService",
]
