from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from apps.structure.dataclasses.mb_spec_dataclass import MBSpec


@dataclass(frozen=True)
class CurrentTerm:
    index: Tuple[int, ...]
    J: Tuple[int, ...]
    sign: int
    delta_sign: int
    dbar_factors: Tuple[Tuple[int, int], ...]
    conj_pv_factors: Tuple[Tuple[int, int, int], ...]
    pv_factors: Tuple[Tuple[int, int], ...]
    mb: Optional[MBSpec]
    prefactor_exponent: int

    @property
    def q(self) -> int:
        return len(self.J)

    @property
    def f_variables(self) -> Tuple[int, ...]:
        return tuple(
            sorted(
                [variable for variable, _, _ in self.conj_pv_factors]
                + [variable for variable, _ in self.pv_factors]
            )
        )

    @property
    def powers(self) -> Dict[int, int]:
        powers: Dict[int, int] = dict(self.dbar_factors)
        powers.update(
            {variable: power for variable, power, _ in self.conj_pv_factors}
        )
        powers.update(dict(self.pv_factors))
        return powers
