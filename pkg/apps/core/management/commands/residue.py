import json
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Type

from django.conf import settings
from django.core.management.base import (
    BaseCommand,
    CommandError,
    CommandParser,
)
from django.forms import Form

from apps.cones.exceptions import StructuralAssumptionError
from apps.cones.services import ConeService
from apps.core.choices import OutputFormat
from apps.core.exceptions import NumericalNonconvergenceError, SchemaError
from apps.core.forms import (
    JobConfigForm,
    MatrixForm,
    MBSpecForm,
    TestFormForm,
)
from apps.core.report_templates import (
    ANALYZE_REPORT,
    EVAL_REPORT,
    MB_REPORT,
    SELFCHECK_REPORT,
    STRUCTURE_REPORT,
    VERIFY_REPORT,
)
from apps.core.services import ReportService, SelfcheckService
from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.exceptions import LinalgError
from apps.linalg.services import ExactLinalgService
from apps.mellin.exceptions import MellinBarnesError
from apps.mellin.services import MellinBarnesService
from apps.oracle.exceptions import OracleError
from apps.oracle.selectors import CaseSelector
from apps.oracle.services import VerificationService
from apps.oracle.tasks import verify_case_task
from apps.pairing.choices import Convention
from apps.pairing.exceptions import PairingError
from apps.pairing.services import PairingService
from apps.structure.choices import RenderFormat
from apps.structure.exceptions import StructureError
from apps.structure.services import StructureService, TermRenderService

EXIT_STRICT_FAILURE: int = 1
EXIT_SCHEMA: int = 2
EXIT_NONCONVERGENCE: int = 3
EXIT_STRUCTURAL: int = 4

SCHEMA_ERRORS: Tuple[Type[Exception], ...] = (
    SchemaError,
    LinalgError,
    PairingError,
    StructureError,
    OracleError,
    MellinBarnesError,
)

Output = Tuple[str, bool]


class Command(BaseCommand):
    help = "Structure, evaluate and verify residue currents of monomial maps."

    def add_arguments(self, parser: CommandParser) -> None:
        subcommands = parser.add_subparsers(dest="subcommand", required=True)

        analyze = subcommands.add_parser(
            "analyze", help="Cone reports for every index set I."
        )
        self._add_matrix(analyze)

        structure = subcommands.add_parser(
            "structure", help="Terms of the residue current."
        )
        self._add_matrix(structure)

        evaluate = subcommands.add_parser(
            "eval", help="Action of the current on a test form."
        )
        self._add_matrix(evaluate)
        evaluate.add_argument("--testform", required=True)
        evaluate.add_argument(
            "--convention",
            choices=Convention.values,
            default=Convention.BOCHNER_MARTINELLI,
        )

        verify = subcommands.add_parser(
            "verify", help="Compare the structure with the oracle."
        )
        self._add_matrix(verify, required=False)
        verify.add_argument("--testform")
        verify.add_argument("--cases", type=Path)
        verify.add_argument("--tolerance")
        verify.add_argument("--taus")
        verify.add_argument("--strict", action="store_true")

        mb = subcommands.add_parser(
            "mb", help="Evaluate a Mellin-Barnes factor F."
        )
        mb.add_argument("--spec", required=True)
        mb.add_argument("--bases", required=True)
        mb.add_argument("--format", default=OutputFormat.TEXT)

        selfcheck = subcommands.add_parser(
            "selfcheck", help="Built-in numeric and exactness suites."
        )
        selfcheck.add_argument("--seed")
        selfcheck.add_argument("--strict", action="store_true")
        selfcheck.add_argument("--format", default=OutputFormat.TEXT)

    def _add_matrix(self, parser: Any, required: bool = True) -> None:
        parser.add_argument("--matrix", required=required)
        parser.add_argument("--format", default=OutputFormat.TEXT)

    def handle(self, *args: Any, **options: Any) -> None:
        handlers: Dict[str, Callable[[Dict[str, Any]], Output]] = {
            "analyze": self._analyze,
            "structure": self._structure,
            "eval": self._evaluate,
            "verify": self._verify,
            "mb": self._mb,
            "selfcheck": self._selfcheck,
        }
        try:
            output, passed = handlers[options["subcommand"]](options)
        except StructuralAssumptionError as exc:
            raise CommandError(
                f"Structural assumption violated: {exc}",
                returncode=EXIT_STRUCTURAL,
            ) from exc
        except NumericalNonconvergenceError as exc:
            raise CommandError(
                f"Numerical nonconvergence: {exc}",
                returncode=EXIT_NONCONVERGENCE,
            ) from exc
        except SCHEMA_ERRORS as exc:
            raise CommandError(
                f"Schema error: {exc}", returncode=EXIT_SCHEMA
            ) from exc

        self.stdout.write(output)
        if options.get("strict") and not passed:
            raise CommandError(
                "Verification failed.", returncode=EXIT_STRICT_FAILURE
            )

    def _validated(self, form: Form) -> Dict[str, Any]:
        if not form.is_valid():
            raise SchemaError(form.errors.as_text())
        return form.cleaned_data

    def _job(self, options: Dict[str, Any]) -> Dict[str, Any]:
        return self._validated(
            JobConfigForm(
                data={
                    "format": options.get("format"),
                    "tolerance": options.get("tolerance"),
                    "taus": options.get("taus"),
                    "seed": options.get("seed"),
                    "strict": options.get("strict", False),
                }
            )
        )

    def _matrix(self, options: Dict[str, Any]) -> ExponentMatrix:
        cleaned = self._validated(
            MatrixForm(data={"matrix": options["matrix"]})
        )
        return cleaned["matrix"]

    def _render(
        self,
        job: Dict[str, Any],
        document: Any,
        template: Any,
        context: Dict[str, Any],
    ) -> str:
        reports = ReportService()
        if job["format"] == OutputFormat.JSON:
            return reports.dumps(document=document)
        return reports.render(report_template=template, context=context)

    def _analyze(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        matrix: ExponentMatrix = self._matrix(options)
        linalg = ExactLinalgService()
        reports = ReportService()

        rows: List[Dict[str, Any]] = []
        for index in linalg.iter_indices(matrix=matrix):
            data: IndexData = linalg.index_data(matrix=matrix, index=index)
            rows.append(
                reports.cone_document(
                    report=ConeService().cone_report(matrix=matrix, data=data),
                    data=data,
                )
            )
        document = {
            "p": matrix.p,
            "n": matrix.n,
            "A": [list(row) for row in matrix.entries],
            "column_sums": list(matrix.column_sums),
            "reports": rows,
        }
        context = {"matrix": json.dumps(document["A"]), "reports": rows}
        return self._render(job, document, ANALYZE_REPORT, context), True

    def _structure(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        matrix: ExponentMatrix = self._matrix(options)
        decomposition = StructureService().decompose(matrix=matrix)
        render = TermRenderService()

        document = render.decomposition_to_document(
            decomposition=decomposition
        )
        context = {
            "matrix": json.dumps(document["A"]),
            "terms": [
                {
                    "index": list(term.index),
                    "J": list(term.J),
                    "q": term.q,
                    "text": render.render(
                        term=term, format=RenderFormat.TEXT
                    ),
                }
                for term in decomposition.terms
            ],
            "skipped": document["skipped"],
        }
        return self._render(job, document, STRUCTURE_REPORT, context), True

    def _evaluate(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        matrix: ExponentMatrix = self._matrix(options)
        form = self._validated(
            TestFormForm(data={"testform": options["testform"]}, n=matrix.n)
        )["testform"]
        if form is None:
            raise SchemaError("The test form is required.")

        pairing = PairingService()
        result = pairing.to_convention(
            result=pairing.evaluate_current(matrix=matrix, form=form),
            convention=Convention(options["convention"]),
        )
        reports = ReportService()
        context = {
            "convention": str(result.convention),
            "value": reports.format_number(result.value),
            "error": f"{result.abs_error_estimate:.3e}",
            "contributions": [
                {
                    "index": list(contribution.index),
                    "q": contribution.q,
                    "value": reports.format_number(contribution.value),
                    "error": f"{contribution.abs_error_estimate:.3e}",
                }
                for contribution in result.contributions
            ],
        }
        document = reports.pairing_document(result=result)
        return self._render(job, document, EVAL_REPORT, context), True

    def _case_documents(self, options: Dict[str, Any]) -> List[Any]:
        selector = CaseSelector()
        if options.get("matrix") is None:
            if options.get("testform") is not None:
                raise SchemaError("--testform needs --matrix.")
            return selector.get_case_documents(path=options.get("cases"))
        if options.get("testform") is None:
            raise SchemaError("--matrix needs --testform.")
        try:
            return [
                {
                    "name": "command line",
                    "matrix": json.loads(options["matrix"]),
                    "testform": json.loads(options["testform"]),
                }
            ]
        except json.JSONDecodeError as exc:
            raise SchemaError(f"Malformed JSON: {exc}") from exc

    def _verify(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        tolerance: float = (
            job["tolerance"] or settings.RESIDUE_VERIFY_TOLERANCE
        )
        taus: Optional[List[float]] = (
            None if job["taus"] is None else list(job["taus"])
        )
        documents = self._case_documents(options)
        selector = CaseSelector()
        for document in documents:
            selector.parse_case(document=document)

        verification = VerificationService()
        report = verification.report(
            results=[
                verification.case_from_document(
                    document=verify_case_task.delay(
                        case=document, tolerance=tolerance, taus=taus
                    ).get()
                )
                for document in documents
            ],
            tolerance=tolerance,
        )
        reports = ReportService()
        context = {
            "rows": reports.verification_rows(report=report),
            "passed": report.passed,
            "vacuous": report.vacuous,
        }
        document = reports.verification_document(report=report)
        output = self._render(job, document, VERIFY_REPORT, context)
        return output, report.passed

    def _mb(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        cleaned = self._validated(
            MBSpecForm(
                data={"spec": options["spec"], "bases": options["bases"]}
            )
        )
        value = MellinBarnesService().eval_f(
            spec=cleaned["spec"], bases=cleaned["bases"]
        )
        reports = ReportService()
        context = {
            "bases": ", ".join(f"{t:g}" for t in cleaned["bases"]),
            "value": reports.format_number(value.value),
            "error": f"{value.abs_error_estimate:.3e}",
            "height": f"{value.truncation_height:g}",
            "step": f"{value.step:g}",
            "nodes": value.nodes,
        }
        document = reports.mb_document(value=value)
        return self._render(job, document, MB_REPORT, context), True

    def _selfcheck(self, options: Dict[str, Any]) -> Output:
        job = self._job(options)
        mb = MellinBarnesService().selfcheck()
        exactness = SelfcheckService().exactness(seed=job["seed"])
        passed: bool = mb.passed and exactness.passed
        context = {
            "points": [
                {
                    "pair": point.pair,
                    "t": f"{point.t:g}",
                    "computed": f"{point.computed:.10g}",
                    "expected": f"{point.expected:.10g}",
                }
                for point in mb.points
            ],
            "gamma_count": len(mb.gamma_checks),
            "gamma_error": f"{mb.gamma_max_relative_error:.3e}",
            "matrices": exactness.matrices,
            "terms": exactness.terms,
            "skips": exactness.structural_skips,
            "failures": exactness.failures,
            "passed": passed,
        }
        document = ReportService().selfcheck_document(
            mb=mb, exactness=exactness
        )
        output = self._render(job, document, SELFCHECK_REPORT, context)
        return output, passed
