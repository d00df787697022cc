from cmath import pi
from math import factorial
from typing import List, Sequence, Tuple

from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService
from apps.pairing.dataclasses import SeparableCoefficient, TestForm

TWO_PI_I: complex = 2j * pi

Component = Tuple[IndexData, Tuple[SeparableCoefficient, ...]]


class ComponentService:
    """Per-I bookkeeping of the solid integrals over C^n.

    The wedge of the conjugate differentials against phi_I dzeta ^
    dzeta-bar[I] is Delta_I times a monomial; moving dzeta-bar_I into
    place and integrating the angles gives orientation_sign(I) times
    (-2 pi i)^n times radial integrals in t = |zeta|^2.
    """

    def orientation_sign(
        self, *, index: Sequence[int], p: int, n: int
    ) -> int:
        exponent: int = (
            n * p + sum(index) - p * (p + 1) // 2 + n * (n - 1) // 2
        )
        return -1 if exponent % 2 else 1

    def bochner_martinelli_constant(self, *, p: int) -> complex:
        sign: int = -1 if (p * (p - 1) // 2) % 2 else 1
        return sign * factorial(p - 1) / TWO_PI_I**p

    def admissible(
        self,
        *,
        matrix: ExponentMatrix,
        index: Sequence[int],
        coefficient: SeparableCoefficient,
    ) -> bool:
        """Every angular integral is 2 pi rather than 0."""
        return all(
            factor.holomorphic
            == factor.antiholomorphic
            + matrix.column_sum(factor.variable)
            - (factor.variable in index)
            for factor in coefficient.factors
        )

    def components(
        self, *, matrix: ExponentMatrix, form: TestForm
    ) -> List[Component]:
        """Components of phi whose minor Delta_I does not vanish."""
        linalg = ExactLinalgService()
        components: List[Component] = []
        for index in sorted(form.components):
            data: IndexData = linalg.index_data(matrix=matrix, index=index)
            if data.degenerate:
                continue
            components.append((data, form.components[index]))
        return components
