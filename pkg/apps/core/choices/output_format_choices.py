from django.db import models
from django.utils.translation import gettext_lazy as _


class OutputFormat(models.TextChoices):
    TEXT = "text", _("Text")
    JSON = "json", _("JSON")
