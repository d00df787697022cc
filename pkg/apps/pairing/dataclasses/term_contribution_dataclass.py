from dataclasses import dataclass
from typing import Tuple

from apps.pairing.dataclasses.angular_verdict_dataclass import AngularVerdict


@dataclass(frozen=True)
class TermContribution:
    index: Tuple[int, ...]
    q: int
    value: complex
    abs_error_estimate: float
    selection_trace: Tuple[AngularVerdict, ...]
    quadrature_nodes: int = 0
