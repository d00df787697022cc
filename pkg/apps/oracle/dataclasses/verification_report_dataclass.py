from dataclasses import dataclass
from typing import Tuple

from apps.oracle.dataclasses.case_result_dataclass import CaseResult


@dataclass(frozen=True)
class VerificationReport:
    results: Tuple[CaseResult, ...]
    tolerance: float

    @property
    def vacuous(self) -> bool:
        return not self.results

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.results)
