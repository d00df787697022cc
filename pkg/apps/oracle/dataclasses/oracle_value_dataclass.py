from dataclasses import dataclass
from typing import Optional, Tuple


@dataclass(frozen=True)
class OracleValue:
    """Limit of sampled values as tau -> 0+, samples by decreasing tau."""

    value: complex
    tau_sequence: Tuple[Tuple[float, complex], ...]
    extrapolated: bool
    abs_error_estimate: float
    theta: Optional[float] = None
    fit_residual: float = 0.0
