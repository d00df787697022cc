from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from apps.cones.choices import Vanishing


@dataclass(frozen=True)
class ConeReport:
    index: Tuple[int, ...]
    q: int
    J: Tuple[int, ...]
    vanishing: Vanishing
    witness: Optional[Tuple[Fraction, ...]] = None
    implicit: Tuple[int, ...] = ()

    @property
    def contributes(self) -> bool:
        return self.vanishing == Vanishing.NONE
