from dataclasses import dataclass
from typing import Tuple

from apps.oracle.dataclasses.oracle_value_dataclass import OracleValue


@dataclass(frozen=True)
class ContourCollapseReport:
    index: Tuple[int, ...]
    q: int
    shift: Tuple[float, ...]
    full_contour: OracleValue
    collapsed: complex
    gap: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.gap <= self.tolerance
