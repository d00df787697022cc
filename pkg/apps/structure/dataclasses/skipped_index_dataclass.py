from dataclasses import dataclass
from typing import Tuple

from apps.cones.choices import Vanishing


@dataclass(frozen=True)
class SkippedIndex:
    index: Tuple[int, ...]
    reason: Vanishing
