from apps.pairing.dataclasses.angular_verdict_dataclass import AngularVerdict
from apps.pairing.dataclasses.pairing_result_dataclass import PairingResult
from apps.pairing.dataclasses.radial_density_dataclass import RadialDensity
from apps.pairing.dataclasses.radial_integral_dataclass import RadialIntegral
from apps.pairing.dataclasses.radial_profile_dataclass import RadialProfile
from apps.pairing.dataclasses.separable_coefficient_dataclass import (
    SeparableCoefficient,
    VariableFactor,
)
from apps.pairing.dataclasses.term_contribution_dataclass import (
    TermContribution,
)
from apps.pairing.dataclasses.test_form_dataclass import TestForm

__all__ = [
    "AngularVerdict",
    "PairingResult",
    "RadialDensity",
    "RadialIntegral",
    "RadialProfile",
    "SeparableCoefficient",
    "TermContribution",
    "TestForm",
    "VariableFactor",
]
