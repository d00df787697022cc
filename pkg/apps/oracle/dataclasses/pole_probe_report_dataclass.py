from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class PoleProbeReport:
    column: int
    base: Tuple[float, ...]
    direction: Tuple[float, ...]
    deltas: Tuple[float, ...]
    products: Tuple[complex, ...]
    stabilized: bool
    vanishing: bool

    @property
    def limit(self) -> complex:
        """Products are linear in delta near 0; extrapolate the last two."""
        if len(self.products) < 2:
            return self.products[-1]
        d1, d2 = self.deltas[-2], self.deltas[-1]
        p1, p2 = self.products[-2], self.products[-1]
        return (d1 * p2 - d2 * p1) / (d1 - d2)
