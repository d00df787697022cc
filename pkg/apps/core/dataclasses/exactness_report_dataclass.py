from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class ExactnessReport:
    """Exact invariants checked over randomly drawn matrices."""

    seed: int
    matrices: int
    terms: int
    structural_skips: int
    failures: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures
