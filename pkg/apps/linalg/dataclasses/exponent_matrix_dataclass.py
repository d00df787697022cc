from dataclasses import dataclass
from typing import Tuple

from apps.linalg.exceptions import InvalidExponentMatrixError


@dataclass(frozen=True)
class ExponentMatrix:
    """Exponents of the monomials f_j = zeta^{alpha_j}, one row per f_j.

    Rows and columns are addressed with 1-based indices, the way the
    reports print them.
    """

    p: int
    n: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.p < 1 or self.n < 1:
            raise InvalidExponentMatrixError(
                "The matrix must have at least one row and one column."
            )
        if self.p > self.n:
            raise InvalidExponentMatrixError(
                f"The number of rows p={self.p} exceeds n={self.n}."
            )
        if len(self.entries) != self.p:
            raise InvalidExponentMatrixError(
                f"Expected {self.p} rows, got {len(self.entries)}."
            )
        for position, row in enumerate(self.entries, start=1):
            if len(row) != self.n:
                raise InvalidExponentMatrixError(
                    f"Row {position} has {len(row)} entries, expected "
                    f"{self.n}."
                )
            if any(
                isinstance(entry, bool) or not isinstance(entry, int)
                for entry in row
            ):
                raise InvalidExponentMatrixError(
                    f"Row {position} contains a non-integer exponent."
                )
            if any(entry < 0 for entry in row):
                raise InvalidExponentMatrixError(
                    f"Row {position} contains a negative exponent."
                )
            if not any(row):
                raise InvalidExponentMatrixError(
                    f"Row {position} is all zero, so f_{position} is "
                    "constant."
                )

    def row(self, j: int) -> Tuple[int, ...]:
        return self.entries[j - 1]

    def column(self, k: int) -> Tuple[int, ...]:
        return tuple(row[k - 1] for row in self.entries)

    @property
    def columns(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.column(k) for k in range(1, self.n + 1))

    def column_sum(self, k: int) -> int:
        return sum(self.column(k))

    @property
    def column_sums(self) -> Tuple[int, ...]:
        return tuple(sum(column) for column in self.columns)
