from dataclasses import dataclass
from typing import Dict, Tuple

from apps.pairing.dataclasses.separable_coefficient_dataclass import (
    SeparableCoefficient,
)
from apps.pairing.exceptions import InvalidTestFormError


@dataclass(frozen=True)
class TestForm:
    """phi = sum_I phi_I dzeta_I ^ dzeta-bar[I], each phi_I a sum."""

    n: int
    components: Dict[Tuple[int, ...], Tuple[SeparableCoefficient, ...]]

    def __post_init__(self) -> None:
        for index, coefficients in self.components.items():
            for coefficient in coefficients:
                if sorted(coefficient.variables) != list(
                    range(1, self.n + 1)
                ):
                    raise InvalidTestFormError(
                        f"The coefficient of I={index} must describe every "
                        f"variable 1..{self.n} exactly once."
                    )

    def coefficients(
        self, index: Tuple[int, ...]
    ) -> Tuple[SeparableCoefficient, ...]:
        return self.components.get(tuple(index), ())
