from django.db import models
from django.utils.translation import gettext_lazy as _


class VariableRole(models.TextChoices):
    DBAR = "dbar", _("Residue factor")
    CONJ_PV = "conj_pv", _("Conjugate principal value")
    PV = "pv", _("Principal value")
