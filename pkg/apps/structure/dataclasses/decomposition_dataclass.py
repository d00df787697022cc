from dataclasses import dataclass
from typing import Tuple

from apps.linalg.dataclasses import ExponentMatrix
from apps.structure.dataclasses.current_term_dataclass import CurrentTerm
from apps.structure.dataclasses.skipped_index_dataclass import SkippedIndex


@dataclass(frozen=True)
class Decomposition:
    matrix: ExponentMatrix
    terms: Tuple[CurrentTerm, ...]
    skipped: Tuple[SkippedIndex, ...]

    @property
    def is_empty(self) -> bool:
        return not self.terms
