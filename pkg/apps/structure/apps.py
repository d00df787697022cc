from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class StructureConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.structure"
    verbose_name: StrOrPromise = _("Current structure")
    label: str = "structure"
