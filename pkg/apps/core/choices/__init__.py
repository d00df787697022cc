from apps.core.choices.output_format_choices import OutputFormat

__all__ = [
    "OutputFormat",
]
