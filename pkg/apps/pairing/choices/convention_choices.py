from django.db import models
from django.utils.translation import gettext_lazy as _


class Convention(models.TextChoices):
    BOCHNER_MARTINELLI = "bochner_martinelli", _(
        "Regularized Bochner-Martinelli limit"
    )
    DOLBEAULT = "dolbeault", _("One 2 pi i per dbar factor")
