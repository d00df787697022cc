from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class ResidueAverage:
    """Mean of the torus residue function over sampled simplex points."""

    value: complex
    spread: float
    eta: float
    samples: Tuple[Tuple[float, ...], ...]
