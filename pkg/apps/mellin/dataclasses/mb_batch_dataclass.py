from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MBBatch:
    values: np.ndarray
    abs_error_estimate: float
    truncation_height: float
    nodes: int
    step: float
