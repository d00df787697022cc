from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class CaseResult:
    name: str
    structure_value: complex
    oracle_value: complex
    structure_error: float
    oracle_error: float
    relative_gap: float
    tolerance: float
    passed: bool
    vanishing: bool = False
    residue_value: Optional[complex] = None
    error: Optional[str] = None
