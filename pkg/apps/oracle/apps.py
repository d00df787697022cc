from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class OracleConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.oracle"
    verbose_name: StrOrPromise = _("Regularized integral oracle")
    label: str = "oracle"
