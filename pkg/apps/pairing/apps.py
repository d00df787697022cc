from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _
from django_stubs_ext import StrOrPromise


class PairingConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name: str = "apps.pairing"
    verbose_name: StrOrPromise = _("Test form pairing")
    label: str = "pairing"
