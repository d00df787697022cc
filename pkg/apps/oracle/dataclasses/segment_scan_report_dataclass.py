from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class SegmentScanReport:
    """Gamma sampled at start + t (end - start), t in [0, 1].

    second_differences sit at the interior parameters, in units of t.
    drift compares them with the doubled step at the shared centers.
    """

    start: Tuple[complex, ...]
    end: Tuple[complex, ...]
    parameters: Tuple[float, ...]
    values: Tuple[complex, ...]
    second_differences: Tuple[complex, ...]
    drift: float
    pole_free: bool

    @property
    def max_second_difference(self) -> float:
        return max(
            (abs(value) for value in self.second_differences), default=0.0
        )
