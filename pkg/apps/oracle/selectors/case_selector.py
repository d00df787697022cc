import json
from pathlib import Path
from typing import Any, Dict, List, Optional

from django.conf import settings

from apps.core.forms import MatrixForm, TestFormForm
from apps.linalg.dataclasses import ExponentMatrix
from apps.oracle.dataclasses import VerificationCase
from apps.oracle.exceptions import CaseFileError
from apps.oracle.services.extrapolation_service import MIN_SAMPLES

Document = Dict[str, Any]


class CaseSelector:
    """Verification cases stored as JSON under fixtures/cases/."""

    def get_case_documents(
        self, *, path: Optional[Path] = None
    ) -> List[Document]:
        path = Path(settings.RESIDUE_CASES_DIR) if path is None else path
        if path.is_dir():
            files: List[Path] = sorted(path.glob("*.json"))
        elif path.is_file():
            files = [path]
        else:
            raise CaseFileError(f"Case file not found: {path}")

        documents: List[Document] = []
        for file in files:
            try:
                content: Any = json.loads(file.read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise CaseFileError(
                    f"Unreadable case file {file}: {exc}"
                ) from exc
            if not isinstance(content, dict) or not isinstance(
                content.get("cases"), list
            ):
                raise CaseFileError(f'{file} must list its "cases".')
            documents.extend(content["cases"])
        return documents

    def parse_case(self, *, document: Document) -> VerificationCase:
        if not isinstance(document, dict) or "name" not in document:
            raise CaseFileError("Every case needs a name.")

        matrix_form = MatrixForm(
            data={"matrix": json.dumps(document.get("matrix"))}
        )
        if not matrix_form.is_valid():
            raise CaseFileError(
                f"Case {document['name']}: {matrix_form.errors.as_text()}"
            )
        matrix: ExponentMatrix = matrix_form.cleaned_data["matrix"]

        test_form_form = TestFormForm(
            data={"testform": json.dumps(document.get("testform"))},
            n=matrix.n,
        )
        if not test_form_form.is_valid():
            raise CaseFileError(
                f"Case {document['name']}: {test_form_form.errors.as_text()}"
            )
        if test_form_form.cleaned_data["testform"] is None:
            raise CaseFileError(f"Case {document['name']} has no test form.")

        tolerance: Any = document.get("tolerance")
        if tolerance is not None and (
            not isinstance(tolerance, (int, float)) or tolerance <= 0
        ):
            raise CaseFileError(
                f"Case {document['name']}: the tolerance must be positive."
            )

        taus: Any = document.get("taus")
        if taus is not None:
            if (
                not isinstance(taus, list)
                or len(taus) < MIN_SAMPLES
                or not all(
                    isinstance(tau, (int, float))
                    and not isinstance(tau, bool)
                    and tau > 0
                    for tau in taus
                )
            ):
                raise CaseFileError(
                    f"Case {document['name']}: taus must list at least "
                    f"{MIN_SAMPLES} positive values."
                )
            taus = tuple(float(tau) for tau in taus)
        return VerificationCase(
            name=str(document["name"]),
            matrix=matrix,
            form=test_form_form.cleaned_data["testform"],
            tolerance=tolerance,
            taus=taus,
        )

    def get_cases(
        self, *, path: Optional[Path] = None
    ) -> List[VerificationCase]:
        return [
            self.parse_case(document=document)
            for document in self.get_case_documents(path=path)
        ]
