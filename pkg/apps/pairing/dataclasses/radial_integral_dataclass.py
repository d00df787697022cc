from dataclasses import dataclass


@dataclass(frozen=True)
class RadialIntegral:
    value: float
    abs_error_estimate: float
    nodes: int
    step: float = 0.0
