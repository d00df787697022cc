from apps.cones.choices.vanishing_choices import Vanishing

__all__ = [
    "Vanishing",
]
