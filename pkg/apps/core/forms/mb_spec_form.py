from typing import Any, Dict, Tuple

from django import forms
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.forms.job_config_form import parse_positive_list
from apps.structure.dataclasses import MBSpec
from apps.structure.exceptions import TermDocumentError
from apps.structure.services import TermRenderService


class MBSpecForm(forms.Form):
    spec = forms.JSONField(
        error_messages={
            "required": _("The Mellin-Barnes spec is required."),
            "invalid": _("The Mellin-Barnes spec must be valid JSON."),
        },
    )
    bases = forms.CharField(
        error_messages={"required": _("The bases t are required.")},
    )

    def clean_spec(self) -> MBSpec:
        document: Any = self.cleaned_data["spec"]
        if not isinstance(document, dict):
            raise ValidationError(_("The spec must be a JSON object."))
        try:
            return TermRenderService().parse_mb_spec(document=document)
        except TermDocumentError as exc:
            raise ValidationError(str(exc)) from exc

    def clean_bases(self) -> Tuple[float, ...]:
        return parse_positive_list(self.cleaned_data["bases"], label="bases")

    def clean(self) -> Dict[str, Any]:
        cleaned_data: Dict[str, Any] = super().clean()
        spec = cleaned_data.get("spec")
        bases = cleaned_data.get("bases")
        if spec is not None and bases is not None and len(bases) != spec.dim:
            raise ValidationError(
                _("The spec has %(dim)d bases, %(count)d were given."),
                params={"dim": spec.dim, "count": len(bases)},
            )
        return cleaned_data
