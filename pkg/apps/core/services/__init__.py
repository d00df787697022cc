from apps.core.services.report_service import ReportService
from apps.core.services.selfcheck_service import SelfcheckService

__all__ = [
    "ReportService",
    "SelfcheckService",
]
