from django.db import models
from django.utils.translation import gettext_lazy as _


class ProfileFamily(models.TextChoices):
    BUMP = "bump", _("Bump")
    PLATEAU = "plateau", _("Plateau")
    ANNULUS = "annulus", _("Annulus")
