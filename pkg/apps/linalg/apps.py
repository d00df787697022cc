from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class LinalgConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.linalg"
    verbose_name: StrOrPromise = _("Exact linear algebra")
    label: str = "linalg"
