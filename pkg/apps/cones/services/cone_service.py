import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Tuple

from apps.cones.choices import Vanishing
from apps.cones.dataclasses import (
    ConeReport,
    FeasibilityResult,
    LinearInequality,
)
from apps.cones.exceptions import StructuralAssumptionError
from apps.cones.services.fourier_motzkin_service import FourierMotzkinService
from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService

logger = logging.getLogger(__name__)


class ConeService:

    def constraint_system(
        self, *, matrix: ExponentMatrix, index: Tuple[int, ...]
    ) -> List[LinearInequality]:
        """Rows alpha^k . x >= 0 for k in I, then -sum(x) >= 0 last."""
        constraints: List[LinearInequality] = [
            LinearInequality.of(matrix.column(k)) for k in index
        ]
        constraints.append(LinearInequality.of([-1] * matrix.p))
        return constraints

    def cone_report(
        self, *, matrix: ExponentMatrix, data: IndexData
    ) -> ConeReport:
        if data.degenerate:
            return ConeReport(
                index=data.index, q=0, J=(), vanishing=Vanishing.ZERO_MINOR
            )

        constraints: List[LinearInequality] = self.constraint_system(
            matrix=matrix, index=data.index
        )
        fourier_motzkin = FourierMotzkinService()

        half_space: FeasibilityResult = fourier_motzkin.strict_feasible(
            constraints=constraints, strict_index=len(data.index)
        )
        if half_space.feasible:
            logger.debug(
                "I=%s meets the open half-space at %s",
                data.index,
                half_space.witness,
            )
            return ConeReport(
                index=data.index,
                q=0,
                J=(),
                vanishing=Vanishing.Q_ZERO,
                witness=half_space.witness,
            )

        implicit: Tuple[int, ...] = tuple(
            k
            for position, k in enumerate(data.index)
            if not fourier_motzkin.strict_feasible(
                constraints=constraints, strict_index=position
            ).feasible
        )

        linalg = ExactLinalgService()
        q: int = linalg.rank(vectors=[matrix.column(k) for k in implicit])
        J: Tuple[int, ...] = self._independent_subset(
            matrix=matrix, implicit=implicit, q=q
        )

        ones: Tuple[Fraction, ...] = (Fraction(1),) * matrix.p
        spanned: int = linalg.rank(
            vectors=[matrix.column(k) for k in J] + [ones]
        )
        if spanned != q:
            raise StructuralAssumptionError(
                f"(1, ..., 1) is not spanned by the columns J={J} of "
                f"I={data.index}."
            )

        return ConeReport(
            index=data.index,
            q=q,
            J=J,
            vanishing=Vanishing.NONE,
            implicit=implicit,
        )

    def _independent_subset(
        self, *, matrix: ExponentMatrix, implicit: Tuple[int, ...], q: int
    ) -> Tuple[int, ...]:
        if len(implicit) == q:
            return implicit

        linalg = ExactLinalgService()
        for subset in combinations(implicit, q):
            if linalg.rank(vectors=[matrix.column(k) for k in subset]) == q:
                logger.info(
                    "Implicit set %s is dependent; using J=%s",
                    implicit,
                    subset,
                )
                return subset

        return ()
