import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence

from django.template.loader import render_to_string

from apps.cones.dataclasses import ConeReport
from apps.core.dataclasses import ExactnessReport, ReportTemplate
from apps.linalg.dataclasses import IndexData
from apps.mellin.dataclasses import MBValue, SelfcheckReport
from apps.oracle.dataclasses import VerificationReport
from apps.oracle.services import VerificationService
from apps.pairing.dataclasses import PairingResult

Document = Dict[str, Any]


class ReportService:
    """Text reports through templates, JSON documents with sorted keys."""

    def render(
        self,
        *,
        report_template: ReportTemplate,
        context: Optional[Mapping[str, Any]] = None,
    ) -> str:
        context = dict(context or {})
        context["title"] = render_to_string(
            template_name=report_template.title, context=context
        ).strip()
        return render_to_string(
            template_name=report_template.body, context=context
        )

    def dumps(self, *, document: Any) -> str:
        return json.dumps(
            document, sort_keys=True, ensure_ascii=False, indent=2
        )

    def number(self, value: Optional[complex]) -> Optional[List[float]]:
        if value is None:
            return None
        value = complex(value)
        return [value.real, value.imag]

    def format_number(self, value: Optional[complex]) -> str:
        if value is None:
            return "-"
        value = complex(value)
        if value.imag == 0:
            return f"{value.real:.10g}"
        return f"{value.real:.10g}{value.imag:+.10g}i"

    def rational(self, value: Fraction) -> str:
        return str(value)

    def cone_document(
        self, *, report: ConeReport, data: IndexData
    ) -> Document:
        return {
            "I": list(report.index),
            "delta": self.rational(data.delta),
            "q": report.q,
            "J": list(report.J),
            "implicit": list(report.implicit),
            "vanishing": str(report.vanishing),
            "witness": (
                None
                if report.witness is None
                else [self.rational(x) for x in report.witness]
            ),
        }

    def pairing_document(self, *, result: PairingResult) -> Document:
        return {
            "value": self.number(result.value),
            "abs_error_estimate": result.abs_error_estimate,
            "convention": str(result.convention),
            "quadrature_nodes": result.quadrature_nodes,
            "contributions": [
                {
                    "I": list(contribution.index),
                    "q": contribution.q,
                    "value": self.number(contribution.value),
                    "abs_error_estimate": contribution.abs_error_estimate,
                    "quadrature_nodes": contribution.quadrature_nodes,
                }
                for contribution in sorted(
                    result.contributions, key=lambda c: c.index
                )
            ],
            "selection_trace": [
                {
                    "coefficient": verdict.coefficient,
                    "variable": verdict.variable,
                    "role": str(verdict.role),
                    "keep": verdict.keep,
                    "angular_exponent": verdict.angular_exponent,
                    "radial_exponent": verdict.radial_exponent,
                }
                for verdict in result.selection_trace
            ],
        }

    def verification_document(self, *, report: VerificationReport) -> Document:
        verification = VerificationService()
        return {
            "passed": report.passed,
            "vacuous": report.vacuous,
            "tolerance": report.tolerance,
            "cases": [
                verification.case_to_document(result=result)
                for result in report.results
            ],
        }

    def mb_document(self, *, value: MBValue) -> Document:
        return {
            "value": value.value,
            "abs_error_estimate": value.abs_error_estimate,
            "truncation_height": value.truncation_height,
            "nodes": value.nodes,
            "step": value.step,
        }

    def selfcheck_document(
        self, *, mb: SelfcheckReport, exactness: ExactnessReport
    ) -> Document:
        return {
            "passed": mb.passed and exactness.passed,
            "mellin_barnes": {
                "passed": mb.passed,
                "max_deviation": mb.max_deviation,
                "tolerance": mb.tolerance,
                "points": [
                    {
                        "pair": point.pair,
                        "t": point.t,
                        "expected": point.expected,
                        "computed": point.computed,
                    }
                    for point in mb.points
                ],
                "gamma": [
                    {
                        "label": check.label,
                        "relative_error": check.relative_error,
                    }
                    for check in mb.gamma_checks
                ],
            },
            "exactness": {
                "passed": exactness.passed,
                "seed": exactness.seed,
                "matrices": exactness.matrices,
                "terms": exactness.terms,
                "structural_skips": exactness.structural_skips,
                "failures": list(exactness.failures),
            },
        }

    def verification_rows(
        self, *, report: VerificationReport
    ) -> Sequence[Document]:
        return [
            {
                "name": result.name,
                "structure": self.format_number(result.structure_value),
                "oracle": self.format_number(result.oracle_value),
                "residue": self.format_number(result.residue_value),
                "gap": f"{result.relative_gap:.3e}",
                "tolerance": f"{result.tolerance:g}",
                "status": "PASS" if result.passed else "FAIL",
                "vanishing": result.vanishing,
                "error": result.error,
            }
            for result in report.results
        ]
