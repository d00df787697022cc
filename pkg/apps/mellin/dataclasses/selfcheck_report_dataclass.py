from dataclasses import dataclass
from typing import Tuple

from apps.mellin.dataclasses.gamma_check_dataclass import GammaCheck
from apps.mellin.dataclasses.selfcheck_point_dataclass import SelfcheckPoint


@dataclass(frozen=True)
class SelfcheckReport:
    points: Tuple[SelfcheckPoint, ...]
    gamma_checks: Tuple[GammaCheck, ...]
    tolerance: float
    gamma_tolerance: float

    @property
    def max_deviation(self) -> float:
        return max(point.deviation for point in self.points)

    @property
    def gamma_max_relative_error(self) -> float:
        return max(check.relative_error for check in self.gamma_checks)

    @property
    def passed(self) -> bool:
        return (
            self.max_deviation <= self.tolerance
            and self.gamma_max_relative_error <= self.gamma_tolerance
        )
