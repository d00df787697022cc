from typing import Optional, Tuple

from django import forms
from django.core.exceptions import ValidationError
from django.utils.translation import gettext_lazy as _

from apps.core.choices import OutputFormat

MIN_TAUS: int = 4


def parse_positive_list(value: str, *, label: str) -> Tuple[float, ...]:
    try:
        numbers: Tuple[float, ...] = tuple(
            float(item) for item in value.split(",") if item.strip()
        )
    except ValueError as exc:
        raise ValidationError(
            _("%(label)s must be comma-separated numbers."),
            params={"label": label},
        ) from exc
    if any(number <= 0 for number in numbers):
        raise ValidationError(
            _("Every entry of %(label)s must be positive."),
            params={"label": label},
        )
    return numbers


class JobConfigForm(forms.Form):
    format = forms.ChoiceField(
        choices=OutputFormat.choices,
        required=False,
        error_messages={
            "invalid_choice": _("The output format must be text or json."),
        },
    )
    tolerance = forms.FloatField(
        required=False,
        error_messages={"invalid": _("The tolerance must be a number.")},
    )
    taus = forms.CharField(required=False)
    height = forms.FloatField(required=False)
    step = forms.FloatField(required=False)
    seed = forms.IntegerField(required=False)
    strict = forms.BooleanField(required=False)

    def clean_format(self) -> str:
        return self.cleaned_data["format"] or OutputFormat.TEXT

    def _positive(self, name: str) -> Optional[float]:
        value: Optional[float] = self.cleaned_data[name]
        if value is not None and value <= 0:
            raise ValidationError(
                _("%(name)s must be positive."), params={"name": name}
            )
        return value

    def clean_tolerance(self) -> Optional[float]:
        return self._positive("tolerance")

    def clean_height(self) -> Optional[float]:
        return self._positive("height")

    def clean_step(self) -> Optional[float]:
        return self._positive("step")

    def clean_taus(self) -> Optional[Tuple[float, ...]]:
        value: str = self.cleaned_data["taus"]
        if not value:
            return None
        taus: Tuple[float, ...] = parse_positive_list(value, label="taus")
        if len(taus) < MIN_TAUS:
            raise ValidationError(
                _("At least %(count)d values of tau are needed."),
                params={"count": MIN_TAUS},
            )
        return taus
