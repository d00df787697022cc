from dataclasses import dataclass

from apps.pairing.choices import VariableRole


@dataclass(frozen=True)
class AngularVerdict:
    coefficient: int
    variable: int
    role: VariableRole
    keep: bool
    angular_exponent: int
    radial_exponent: int
