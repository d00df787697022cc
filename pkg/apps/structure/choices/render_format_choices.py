from django.db import models
from django.utils.translation import gettext_lazy as _


class RenderFormat(models.TextChoices):
    TEXT = "text", _("Text")
    STRUCTURED = "structured", _("Structured")
