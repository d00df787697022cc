from apps.linalg.dataclasses.exponent_matrix_dataclass import ExponentMatrix
from apps.linalg.dataclasses.index_data_dataclass import IndexData

__all__ = [
    "ExponentMatrix",
    "IndexData",
]
