from django.db import models
from django.utils.translation import gettext_lazy as _


class Vanishing(models.TextChoices):
    NONE = "none", _("Contributes")
    ZERO_MINOR = "zero_minor", _("Vanishing minor")
    Q_ZERO = "q_zero", _("Empty cone intersection")
