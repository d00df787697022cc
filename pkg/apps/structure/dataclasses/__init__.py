from apps.structure.dataclasses.current_term_dataclass import CurrentTerm
from apps.structure.dataclasses.decomposition_dataclass import Decomposition
from apps.structure.dataclasses.mb_spec_dataclass import MBSpec
from apps.structure.dataclasses.skipped_index_dataclass import SkippedIndex

__all__ = [
    "CurrentTerm",
    "Decomposition",
    "MBSpec",
    "SkippedIndex",
]
