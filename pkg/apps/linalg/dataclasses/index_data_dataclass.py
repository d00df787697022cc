from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple


@dataclass(frozen=True)
class IndexData:
    index: Tuple[int, ...]
    delta: Fraction
    inverse: Optional[Tuple[Tuple[Fraction, ...], ...]]
    mu: Optional[Dict[int, Tuple[Fraction, ...]]]

    @property
    def degenerate(self) -> bool:
        return self.delta == 0

    @property
    def delta_sign(self) -> int:
        return (self.delta > 0) - (self.delta < 0)

    @property
    def complement(self) -> Tuple[int, ...]:
        if self.mu is None:
            return ()
        return tuple(sorted(self.mu))

    def beta(self, j: int) -> Tuple[Fraction, ...]:
        """Row of the inverse that belongs to the variable j of I."""
        if self.inverse is None:
            raise ValueError(f"A_I is singular for I={self.index}.")
        return self.inverse[self.index.index(j)]
