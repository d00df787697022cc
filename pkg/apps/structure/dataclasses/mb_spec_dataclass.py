from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple


@dataclass(frozen=True)
class MBSpec:
    """Gamma rows and combined bases of the Mellin-Barnes factor F.

    gamma_rows[l][j] is the coefficient of lambda_j in the argument
    1 - sum_j c_lj lambda_j of the l-th Gamma factor. power_exponents[j]
    lists (variable, exponent) pairs whose product is the j-th base.
    """

    dim: int
    active: Tuple[int, ...]
    gamma_rows: Tuple[Tuple[Fraction, ...], ...]
    power_exponents: Tuple[Tuple[Tuple[int, Fraction], ...], ...]

    @property
    def variables(self) -> Tuple[int, ...]:
        return tuple(
            sorted(
                {
                    variable
                    for pairs in self.power_exponents
                    for variable, _ in pairs
                }
            )
        )
