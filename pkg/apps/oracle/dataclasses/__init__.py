from apps.oracle.dataclasses.case_result_dataclass import CaseResult
from apps.oracle.dataclasses.contour_collapse_report_dataclass import (
    ContourCollapseReport,
)
from apps.oracle.dataclasses.oracle_value_dataclass import OracleValue
from apps.oracle.dataclasses.pole_probe_report_dataclass import (
    PoleProbeReport,
)
from apps.oracle.dataclasses.residue_average_dataclass import ResidueAverage
from apps.oracle.dataclasses.segment_scan_report_dataclass import (
    SegmentScanReport,
)
from apps.oracle.dataclasses.verification_case_dataclass import (
    VerificationCase,
)
from apps.oracle.dataclasses.verification_report_dataclass import (
    VerificationReport,
)

__all__ = [
    "CaseResult",
    "ContourCollapseReport",
    "OracleValue",
    "PoleProbeReport",
    "ResidueAverage",
    "SegmentScanReport",
    "VerificationCase",
    "VerificationReport",
]
