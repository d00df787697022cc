import logging
import random
from typing import List, Optional, Tuple

from django.conf import settings

from apps.cones.dataclasses import LinearInequality
from apps.cones.exceptions import StructuralAssumptionError
from apps.cones.services import ConeService, FourierMotzkinService
from apps.core.dataclasses import ExactnessReport
from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService
from apps.pairing.choices import ProfileFamily
from apps.pairing.dataclasses import (
    PairingResult,
    RadialProfile,
    SeparableCoefficient,
    TestForm,
    VariableFactor,
)
from apps.pairing.services import PairingService
from apps.structure.dataclasses import CurrentTerm
from apps.structure.exceptions import FactorPartitionError
from apps.structure.services import StructureService

logger = logging.getLogger(__name__)

EXACTNESS_MATRICES: int = 200
MAX_P: int = 3
MAX_N: int = 5
MAX_ENTRY: int = 3
MAX_SCALE: int = 5
DEGREE_OFFSET: int = 5


class SelfcheckService:
    """Exact invariants of the cone engine, structure and pairing."""

    def random_matrix(self, *, generator: random.Random) -> ExponentMatrix:
        p: int = generator.randint(1, MAX_P)
        n: int = generator.randint(p, MAX_N)
        rows: List[Tuple[int, ...]] = []
        while len(rows) < p:
            row = tuple(generator.randint(0, MAX_ENTRY) for _ in range(n))
            # constant monomials are rejected, draw again
            if any(row):
                rows.append(row)
        return ExponentMatrix(p=p, n=n, entries=tuple(rows))

    def scaling_failures(
        self,
        *,
        matrix: ExponentMatrix,
        data: IndexData,
        generator: random.Random,
    ) -> List[str]:
        """Feasibility must not see positive rescaling of constraints."""
        constraints: List[LinearInequality] = ConeService().constraint_system(
            matrix=matrix, index=data.index
        )
        scaled: List[LinearInequality] = []
        for constraint in constraints:
            factor: int = generator.randint(1, MAX_SCALE)
            scaled.append(
                LinearInequality.of(
                    [c * factor for c in constraint.coefficients],
                    constant=constraint.constant * factor,
                    strict=constraint.strict,
                )
            )
        fourier_motzkin = FourierMotzkinService()
        failures: List[str] = []
        for position in range(len(constraints)):
            original: bool = fourier_motzkin.strict_feasible(
                constraints=constraints, strict_index=position
            ).feasible
            rescaled: bool = fourier_motzkin.strict_feasible(
                constraints=scaled, strict_index=position
            ).feasible
            if original != rescaled:
                failures.append(
                    f"A={matrix.entries}, I={data.index}: constraint "
                    f"{position + 1} changes feasibility under scaling"
                )
        return failures

    def violating_form(
        self, *, matrix: ExponentMatrix, term: CurrentTerm
    ) -> TestForm:
        """One coefficient no angular rule can keep."""
        profile = RadialProfile(family=ProfileFamily.BUMP)
        coefficient = SeparableCoefficient(
            factors=tuple(
                VariableFactor(
                    variable=m,
                    holomorphic=matrix.column_sum(m) + DEGREE_OFFSET,
                    antiholomorphic=0,
                    profile=profile,
                )
                for m in range(1, matrix.n + 1)
            )
        )
        return TestForm(n=matrix.n, components={term.index: (coefficient,)})

    def exactness(
        self, *, seed: Optional[int] = None, count: int = EXACTNESS_MATRICES
    ) -> ExactnessReport:
        seed = settings.RESIDUE_SEED if seed is None else seed
        generator = random.Random(seed)
        structure = StructureService()
        linalg = ExactLinalgService()
        pairing = PairingService()
        failures: List[str] = []
        terms: int = 0
        skips: int = 0

        for _ in range(count):
            matrix: ExponentMatrix = self.random_matrix(generator=generator)
            for index in linalg.iter_indices(matrix=matrix):
                data: IndexData = linalg.index_data(
                    matrix=matrix, index=index
                )
                if not data.degenerate:
                    failures += self.scaling_failures(
                        matrix=matrix, data=data, generator=generator
                    )
            try:
                decomposition = structure.decompose(matrix=matrix)
            except StructuralAssumptionError:
                skips += 1
                continue

            for term in decomposition.terms:
                terms += 1
                try:
                    structure.check_partition(
                        term=term, p=matrix.p, n=matrix.n
                    )
                except FactorPartitionError as exc:
                    failures.append(f"A={matrix.entries}: {exc}")
                result: PairingResult = pairing.pair(
                    term=term,
                    form=self.violating_form(matrix=matrix, term=term),
                )
                if result.value != 0 or result.quadrature_nodes != 0:
                    failures.append(
                        f"A={matrix.entries}, I={term.index}: a violated "
                        "angular rule still reached the quadrature"
                    )

        report = ExactnessReport(
            seed=seed,
            matrices=count,
            terms=terms,
            structural_skips=skips,
            failures=tuple(failures),
        )
        if not report.passed:
            logger.warning(
                "Exactness suite found %d failures", len(report.failures)
            )
        return report
