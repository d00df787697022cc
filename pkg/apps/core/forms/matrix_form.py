from typing import Any, Dict

from django import forms
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.linalg.dataclasses import ExponentMatrix
from apps.linalg.exceptions import InvalidExponentMatrixError


class MatrixForm(forms.Form):
    matrix = forms.JSONField(
        error_messages={
            "required": _("The exponent matrix is required."),
            "invalid": _("The exponent matrix must be valid JSON."),
        },
    )

    def clean_matrix(self) -> ExponentMatrix:
        document: Any = self.cleaned_data["matrix"]
        if isinstance(document, list):
            document = {"A": document}
        if not isinstance(document, dict) or not isinstance(
            document.get("A"), list
        ):
            raise ValidationError(
                _('The matrix document lists its rows under "A".')
            )

        rows: Any = document["A"]
        if not rows or not all(isinstance(row, list) for row in rows):
            raise ValidationError(_("Every row of A must be a JSON list."))
        shape: Dict[str, Any] = {
            "p": document.get("p", len(rows)),
            "n": document.get("n", len(rows[0])),
        }
        if any(
            isinstance(value, bool) or not isinstance(value, int)
            for value in shape.values()
        ):
            raise ValidationError(_("p and n must be integers."))

        try:
            return ExponentMatrix(
                p=shape["p"],
                n=shape["n"],
                entries=tuple(tuple(row) for row in rows),
            )
        except InvalidExponentMatrixError as exc:
            raise ValidationError(str(exc)) from exc
