from apps.core.dataclasses.exactness_report_dataclass import ExactnessReport
from apps.core.dataclasses.report_template_dataclass import ReportTemplate

__all__ = [
    "ExactnessReport",
    "ReportTemplate",
]
