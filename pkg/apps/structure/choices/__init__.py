from apps.structure.choices.render_format_choices import RenderFormat

__all__ = [
    "RenderFormat",
]
