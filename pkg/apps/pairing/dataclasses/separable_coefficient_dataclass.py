from dataclasses import dataclass
from typing import Tuple

from apps.pairing.dataclasses.radial_profile_dataclass import RadialProfile
from apps.pairing.exceptions import InvalidTestFormError

MAX_DEGREE: int = 16


@dataclass(frozen=True)
class VariableFactor:
    variable: int
    holomorphic: int
    antiholomorphic: int
    profile: RadialProfile

    def __post_init__(self) -> None:
        for degree in (self.holomorphic, self.antiholomorphic):
            if not 0 <= degree <= MAX_DEGREE:
                raise InvalidTestFormError(
                    f"Degree {degree} of variable {self.variable} is outside "
                    f"0..{MAX_DEGREE}."
                )


@dataclass(frozen=True)
class SeparableCoefficient:
    """weight * prod_m g_m(|zeta_m|^2) zeta_m^a_m conj(zeta_m)^b_m."""

    factors: Tuple[VariableFactor, ...]
    weight: complex = 1.0

    def factor(self, variable: int) -> VariableFactor:
        for factor in self.factors:
            if factor.variable == variable:
                return factor
        raise InvalidTestFormError(
            f"The coefficient has no factor for variable {variable}."
        )

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(factor.variable for factor in self.factors)
