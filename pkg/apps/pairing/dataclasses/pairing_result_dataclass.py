from dataclasses import dataclass
from typing import Tuple

from apps.pairing.choices import Convention
from apps.pairing.dataclasses.angular_verdict_dataclass import AngularVerdict
from apps.pairing.dataclasses.term_contribution_dataclass import (
    TermContribution,
)


@dataclass(frozen=True)
class PairingResult:
    value: complex
    abs_error_estimate: float
    selection_trace: Tuple[AngularVerdict, ...]
    convention: Convention = Convention.BOCHNER_MARTINELLI
    contributions: Tuple[TermContribution, ...] = ()
    quadrature_nodes: int = 0
