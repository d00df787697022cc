from apps.pairing.choices.convention_choices import Convention
from apps.pairing.choices.profile_family_choices import ProfileFamily
from apps.pairing.choices.variable_role_choices import VariableRole

__all__ = [
    "Convention",
    "ProfileFamily",
    "VariableRole",
]
