from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class ConesConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.cones"
    verbose_name: StrOrPromise = _("Cone feasibility")
    label: str = "cones"
