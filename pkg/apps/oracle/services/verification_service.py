import logging
from math import inf, isfinite
from typing import Any, Dict, Optional, Sequence

from django.conf import settings

from apps.oracle.dataclasses import (
    CaseResult,
    OracleValue,
    VerificationCase,
    VerificationReport,
)
from apps.oracle.services.regularized_integral_service import (
    RegularizedIntegralService,
)
from apps.oracle.services.residue_function_service import (
    ResidueFunctionService,
)
from apps.pairing.dataclasses import PairingResult
from apps.pairing.services import PairingService

logger = logging.getLogger(__name__)

VANISHING_RATIO: float = 1e-3

Document = Dict[str, Any]


class VerificationService:
    """Structure formula against the regularized-integral oracle."""

    def _gap(self, *, expected: complex, computed: complex) -> float:
        if expected == 0:
            return 0.0 if computed == 0 else inf
        return abs(computed - expected) / abs(expected)

    def verify_case(
        self,
        *,
        case: VerificationCase,
        tolerance: Optional[float] = None,
        taus: Optional[Sequence[float]] = None,
    ) -> CaseResult:
        if case.tolerance is not None:
            tolerance = case.tolerance
        elif tolerance is None:
            tolerance = settings.RESIDUE_VERIFY_TOLERANCE

        structure: PairingResult = PairingService().evaluate_current(
            matrix=case.matrix, form=case.form
        )
        oracle: OracleValue = RegularizedIntegralService().extrapolate(
            matrix=case.matrix, form=case.form, taus=case.taus or taus
        )

        if structure.value == 0:
            first: complex = oracle.tau_sequence[0][1]
            gap: float = (
                0.0
                if oracle.value == 0
                else abs(oracle.value) / max(abs(first), 1e-300)
            )
            result = CaseResult(
                name=case.name,
                structure_value=0j,
                oracle_value=oracle.value,
                structure_error=structure.abs_error_estimate,
                oracle_error=oracle.abs_error_estimate,
                relative_gap=gap,
                tolerance=VANISHING_RATIO,
                passed=gap <= VANISHING_RATIO,
                vanishing=True,
            )
            logger.info("Case %s vanishes: gap %.3e", case.name, gap)
            return result

        gap = self._gap(expected=structure.value, computed=oracle.value)
        passed: bool = gap <= tolerance or abs(
            oracle.value - structure.value
        ) <= (structure.abs_error_estimate + oracle.abs_error_estimate)

        residue: Optional[complex] = None
        if case.matrix.p == case.matrix.n:
            torus = ResidueFunctionService()
            eps = torus.interior_eps(matrix=case.matrix, form=case.form)
            residue = torus.residue_function_pn(
                matrix=case.matrix, eps=eps, form=case.form
            )
            passed = passed and (
                self._gap(expected=structure.value, computed=residue)
                <= tolerance
            )

        logger.info(
            "Case %s: structure %s, oracle %s, gap %.3e, passed %s",
            case.name,
            structure.value,
            oracle.value,
            gap,
            passed,
        )
        return CaseResult(
            name=case.name,
            structure_value=structure.value,
            oracle_value=oracle.value,
            structure_error=structure.abs_error_estimate,
            oracle_error=oracle.abs_error_estimate,
            relative_gap=gap,
            tolerance=tolerance,
            passed=passed,
            residue_value=residue,
        )

    def failed_case(
        self, *, name: str, error: str, tolerance: float
    ) -> CaseResult:
        return CaseResult(
            name=name,
            structure_value=0j,
            oracle_value=0j,
            structure_error=0.0,
            oracle_error=0.0,
            relative_gap=inf,
            tolerance=tolerance,
            passed=False,
            error=error,
        )

    def report(
        self, *, results: Sequence[CaseResult], tolerance: float
    ) -> VerificationReport:
        report = VerificationReport(
            results=tuple(results), tolerance=tolerance
        )
        if report.vacuous:
            logger.warning("No verification cases: the run passes vacuously.")
        return report

    def verify(
        self,
        *,
        cases: Sequence[VerificationCase],
        tolerance: Optional[float] = None,
    ) -> VerificationReport:
        if tolerance is None:
            tolerance = settings.RESIDUE_VERIFY_TOLERANCE
        return self.report(
            results=[
                self.verify_case(case=case, tolerance=tolerance)
                for case in cases
            ],
            tolerance=tolerance,
        )

    def case_to_document(self, *, result: CaseResult) -> Document:
        def pair(value: Optional[complex]) -> Optional[list]:
            if value is None:
                return None
            return [value.real, value.imag]

        return {
            "name": result.name,
            "structure_value": pair(result.structure_value),
            "oracle_value": pair(result.oracle_value),
            "residue_value": pair(result.residue_value),
            "structure_error": result.structure_error,
            "oracle_error": result.oracle_error,
            "relative_gap": (
                result.relative_gap if isfinite(result.relative_gap) else None
            ),
            "tolerance": result.tolerance,
            "passed": result.passed,
            "vanishing": result.vanishing,
            "error": result.error,
        }

    def case_from_document(self, *, document: Document) -> CaseResult:
        def number(value: Optional[list]) -> Optional[complex]:
            return None if value is None else complex(*value)

        return CaseResult(
            name=document["name"],
            structure_value=complex(*document["structure_value"]),
            oracle_value=complex(*document["oracle_value"]),
            residue_value=number(document["residue_value"]),
            structure_error=document["structure_error"],
            oracle_error=document["oracle_error"],
            relative_gap=(
                inf
                if document["relative_gap"] is None
                else document["relative_gap"]
            ),
            tolerance=document["tolerance"],
            passed=document["passed"],
            vanishing=document["vanishing"],
            error=document["error"],
        )
