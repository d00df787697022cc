import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from apps.cones.choices import Vanishing
from apps.cones.dataclasses import ConeReport
from apps.cones.services import ConeService
from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService
from apps.structure.dataclasses import (
    CurrentTerm,
    Decomposition,
    MBSpec,
    SkippedIndex,
)
from apps.structure.exceptions import FactorPartitionError

logger = logging.getLogger(__name__)


class StructureService:

    def sign_constant(self, *, index: Sequence[int], p: int, n: int) -> int:
        exponent: int = (
            sum(index) - (p + 1) * p // 2 + (n - p + 1) * (n - p) // 2
        )
        return -1 if exponent % 2 else 1

    def mb_spec(
        self, *, data: IndexData, J: Tuple[int, ...]
    ) -> Optional[MBSpec]:
        active: Tuple[int, ...] = tuple(k for k in data.index if k not in J)
        if not active:
            return None
        if data.inverse is None or data.mu is None:
            raise FactorPartitionError(
                f"I={data.index} is degenerate and has no F factor."
            )

        positions: List[int] = [data.index.index(j) for j in active]
        gamma_rows: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(data.inverse[position][row] for position in positions)
            for row in range(len(data.index))
        )
        power_exponents: Tuple[Tuple[Tuple[int, Fraction], ...], ...] = tuple(
            ((j, Fraction(1)),)
            + tuple((k, data.mu[k][position]) for k in sorted(data.mu))
            for j, position in zip(active, positions)
        )

        return MBSpec(
            dim=len(active),
            active=active,
            gamma_rows=gamma_rows,
            power_exponents=power_exponents,
        )

    def build_term(
        self, *, matrix: ExponentMatrix, data: IndexData, report: ConeReport
    ) -> CurrentTerm:
        J: Tuple[int, ...] = report.J
        term = CurrentTerm(
            index=data.index,
            J=J,
            sign=self.sign_constant(index=data.index, p=matrix.p, n=matrix.n),
            delta_sign=data.delta_sign,
            dbar_factors=tuple((j, matrix.column_sum(j)) for j in J),
            conj_pv_factors=tuple(
                (k, matrix.column_sum(k), 1)
                for k in data.index
                if k not in J
            ),
            pv_factors=tuple(
                (k, matrix.column_sum(k))
                for k in range(1, matrix.n + 1)
                if k not in data.index
            ),
            mb=self.mb_spec(data=data, J=J),
            prefactor_exponent=matrix.p - len(J),
        )
        self.check_partition(term=term, p=matrix.p, n=matrix.n)
        return term

    def check_partition(self, *, term: CurrentTerm, p: int, n: int) -> None:
        dbar = [j for j, _ in term.dbar_factors]
        conj = [k for k, _, _ in term.conj_pv_factors]
        pv = [variable for variable, _ in term.pv_factors]

        if sorted(dbar + conj + pv) != list(range(1, n + 1)):
            raise FactorPartitionError(
                f"Factors of I={term.index} do not partition 1..{n}."
            )
        if len(conj) != p - term.q or len(pv) != n - p:
            raise FactorPartitionError(
                f"Factor counts of I={term.index} are inconsistent."
            )
        if (term.mb is None) != (term.q == p):
            raise FactorPartitionError(
                f"F must be present exactly when q < p for I={term.index}."
            )
        if term.mb is not None and term.mb.dim != p - term.q:
            raise FactorPartitionError(
                f"F of I={term.index} has the wrong dimension."
            )

    def decompose(self, *, matrix: ExponentMatrix) -> Decomposition:
        linalg = ExactLinalgService()
        cones = ConeService()
        terms: List[CurrentTerm] = []
        skipped: List[SkippedIndex] = []

        for index in linalg.iter_indices(matrix=matrix):
            data: IndexData = linalg.index_data(matrix=matrix, index=index)
            report: ConeReport = cones.cone_report(matrix=matrix, data=data)

            if report.vanishing != Vanishing.NONE:
                skipped.append(
                    SkippedIndex(index=index, reason=report.vanishing)
                )
                continue

            terms.append(
                self.build_term(matrix=matrix, data=data, report=report)
            )

        logger.info(
            "Decomposed %dx%d matrix into %d terms, %d skipped",
            matrix.p,
            matrix.n,
            len(terms),
            len(skipped),
        )
        return Decomposition(
            matrix=matrix, terms=tuple(terms), skipped=tuple(skipped)
        )
