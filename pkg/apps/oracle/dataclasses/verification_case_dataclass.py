from dataclasses import dataclass
from typing import Optional, Tuple

from apps.linalg.dataclasses import ExponentMatrix
from apps.pairing.dataclasses import TestForm


@dataclass(frozen=True)
class VerificationCase:
    """A case's own tolerance and tau grid win over the run's."""

    name: str
    matrix: ExponentMatrix
    form: TestForm
    tolerance: Optional[float] = None
    taus: Optional[Tuple[float, ...]] = None
