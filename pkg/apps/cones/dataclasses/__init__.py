from apps.cones.dataclasses.cone_report_dataclass import ConeReport
from apps.cones.dataclasses.feasibility_result_dataclass import (
    FeasibilityResult,
)
from apps.cones.dataclasses.linear_inequality_dataclass import (
    LinearInequality,
)

__all__ = [
    "ConeReport",
    "FeasibilityResult",
    "LinearInequality",
]
