from apps.mellin.dataclasses.gamma_check_dataclass import GammaCheck
from apps.mellin.dataclasses.mb_batch_dataclass import MBBatch
from apps.mellin.dataclasses.mb_value_dataclass import MBValue
from apps.mellin.dataclasses.selfcheck_point_dataclass import SelfcheckPoint
from apps.mellin.dataclasses.selfcheck_report_dataclass import (
    SelfcheckReport,
)

__all__ = [
    "GammaCheck",
    "MBBatch",
    "MBValue",
    "SelfcheckPoint",
    "SelfcheckReport",
]
