from dataclasses import dataclass


@dataclass(frozen=True)
class MBValue:
    value: float
    abs_error_estimate: float
    truncation_height: float
    nodes: int
    step: float = 0.0
