from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.exceptions import MalformedIndexError, SingularMatrixError

Rows = Sequence[Sequence[Fraction]]


class ExactLinalgService:

    def validate_index(
        self, *, matrix: ExponentMatrix, index: Sequence[int]
    ) -> Tuple[int, ...]:
        ordered: Tuple[int, ...] = tuple(index)

        if len(ordered) != matrix.p:
            raise MalformedIndexError(
                f"I={ordered} must contain exactly p={matrix.p} entries."
            )
        if any(k < 1 or k > matrix.n for k in ordered):
            raise MalformedIndexError(
                f"I={ordered} contains an entry outside 1..{matrix.n}."
            )
        if any(left >= right for left, right in zip(ordered, ordered[1:])):
            raise MalformedIndexError(
                f"I={ordered} must be strictly increasing."
            )

        return ordered

    def iter_indices(
        self, *, matrix: ExponentMatrix
    ) -> List[Tuple[int, ...]]:
        return list(combinations(range(1, matrix.n + 1), matrix.p))

    def submatrix(
        self, *, matrix: ExponentMatrix, index: Sequence[int]
    ) -> List[List[Fraction]]:
        return [
            [Fraction(matrix.row(j)[k - 1]) for k in index]
            for j in range(1, matrix.p + 1)
        ]

    def bareiss_determinant(self, *, rows: Rows) -> Fraction:
        size: int = len(rows)
        if size == 0:
            return Fraction(1)

        work: List[List[Fraction]] = [
            [Fraction(entry) for entry in row] for row in rows
        ]
        sign: int = 1
        previous_pivot: Fraction = Fraction(1)

        for k in range(size - 1):
            if work[k][k] == 0:
                swap: Optional[int] = next(
                    (r for r in range(k + 1, size) if work[r][k] != 0), None
                )
                if swap is None:
                    return Fraction(0)
                work[k], work[swap] = work[swap], work[k]
                sign = -sign

            for i in range(k + 1, size):
                for j in range(k + 1, size):
                    work[i][j] = (
                        work[i][j] * work[k][k] - work[i][k] * work[k][j]
                    ) / previous_pivot
            previous_pivot = work[k][k]

        return sign * work[size - 1][size - 1]

    def cofactor_determinant(self, *, rows: Rows) -> Fraction:
        size: int = len(rows)
        if size == 0:
            return Fraction(1)
        if size == 1:
            return Fraction(rows[0][0])

        total: Fraction = Fraction(0)
        for column, entry in enumerate(rows[0]):
            if entry == 0:
                continue
            minor: List[List[Fraction]] = [
                [
                    Fraction(value)
                    for c, value in enumerate(row)
                    if c != column
                ]
                for row in rows[1:]
            ]
            sign: int = -1 if column % 2 else 1
            total += sign * Fraction(entry) * self.cofactor_determinant(
                rows=minor
            )

        return total

    def inverse(self, *, rows: Rows) -> Tuple[Tuple[Fraction, ...], ...]:
        size: int = len(rows)
        augmented: List[List[Fraction]] = [
            [Fraction(entry) for entry in row]
            + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(rows)
        ]

        for column in range(size):
            pivot: Optional[int] = next(
                (
                    r
                    for r in range(column, size)
                    if augmented[r][column] != 0
                ),
                None,
            )
            if pivot is None:
                raise SingularMatrixError("The matrix is not invertible.")
            augmented[column], augmented[pivot] = (
                augmented[pivot],
                augmented[column],
            )

            scale: Fraction = augmented[column][column]
            augmented[column] = [value / scale for value in augmented[column]]

            for r in range(size):
                if r == column or augmented[r][column] == 0:
                    continue
                factor: Fraction = augmented[r][column]
                augmented[r] = [
                    value - factor * pivot_value
                    for value, pivot_value in zip(
                        augmented[r], augmented[column]
                    )
                ]

        return tuple(tuple(row[size:]) for row in augmented)

    def rank(self, *, vectors: Sequence[Sequence[Fraction]]) -> int:
        work: List[List[Fraction]] = [
            [Fraction(entry) for entry in vector] for vector in vectors
        ]
        if not work:
            return 0

        rank: int = 0
        width: int = len(work[0])
        for column in range(width):
            pivot: Optional[int] = next(
                (r for r in range(rank, len(work)) if work[r][column] != 0),
                None,
            )
            if pivot is None:
                continue
            work[rank], work[pivot] = work[pivot], work[rank]
            for r in range(rank + 1, len(work)):
                if work[r][column] == 0:
                    continue
                factor: Fraction = work[r][column] / work[rank][column]
                work[r] = [
                    value - factor * pivot_value
                    for value, pivot_value in zip(work[r], work[rank])
                ]
            rank += 1

        return rank

    def dot(
        self, *, left: Sequence[Fraction], right: Sequence[Fraction]
    ) -> Fraction:
        return sum(
            (Fraction(a) * Fraction(b) for a, b in zip(left, right)),
            Fraction(0),
        )

    def index_data(
        self, *, matrix: ExponentMatrix, index: Sequence[int]
    ) -> IndexData:
        ordered: Tuple[int, ...] = self.validate_index(
            matrix=matrix, index=index
        )
        rows: List[List[Fraction]] = self.submatrix(
            matrix=matrix, index=ordered
        )
        delta: Fraction = self.bareiss_determinant(rows=rows)

        if delta == 0:
            return IndexData(index=ordered, delta=delta, inverse=None, mu=None)

        inverse: Tuple[Tuple[Fraction, ...], ...] = self.inverse(rows=rows)
        mu: Dict[int, Tuple[Fraction, ...]] = {
            k: tuple(
                self.dot(left=inverse_row, right=matrix.column(k))
                for inverse_row in inverse
            )
            for k in range(1, matrix.n + 1)
            if k not in ordered
        }

        return IndexData(index=ordered, delta=delta, inverse=inverse, mu=mu)
