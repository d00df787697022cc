from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class MellinConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.mellin"
    verbose_name: StrOrPromise = _("Mellin-Barnes integrals")
    label: str = "mellin"
