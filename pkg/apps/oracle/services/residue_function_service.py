import logging
from math import prod
from typing import List, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService
from apps.oracle.dataclasses import ResidueAverage
from apps.oracle.exceptions import RadiiOutsideSupportError
from apps.pairing.dataclasses import TestForm
from apps.pairing.services import ProfileService

logger = logging.getLogger(__name__)

SIMPLEX_SAMPLES: int = 16
INTERIOR_FRACTION: float = 1e-6


class ResidueFunctionService:
    """Residue integral over the torus {|f_k|^2 = eps_k} when p = n.

    On |zeta_m|^2 = t_m the conjugates are t_m / zeta_m, so each
    coefficient contributes its Cauchy coefficient of zeta_m^-1.
    """

    def _full_index(self, *, matrix: ExponentMatrix) -> IndexData:
        if matrix.p != matrix.n:
            raise ValueError(
                f"The torus integral needs p = n, got p={matrix.p}, "
                f"n={matrix.n}."
            )
        data: IndexData = ExactLinalgService().index_data(
            matrix=matrix, index=tuple(range(1, matrix.n + 1))
        )
        if data.degenerate:
            raise ValueError("The exponent matrix is singular.")
        return data

    def torus_radii(
        self, *, matrix: ExponentMatrix, eps: Sequence[float]
    ) -> Tuple[float, ...]:
        """Squared radii t with prod_m t_m^A[k][m] = eps_k."""
        data: IndexData = self._full_index(matrix=matrix)
        if len(eps) != matrix.p or any(value <= 0 for value in eps):
            raise ValueError(f"eps must hold {matrix.p} positive values.")
        assert data.inverse is not None
        inverse = np.array(
            [[float(value) for value in row] for row in data.inverse]
        )
        return tuple(
            float(t) for t in np.exp(inverse @ np.log(np.array(eps)))
        )

    def interior_eps(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        fraction: float = INTERIOR_FRACTION,
    ) -> Tuple[float, ...]:
        """eps putting every squared radius at fraction * R_m^2."""
        data: IndexData = self._full_index(matrix=matrix)
        if not 0 < fraction < 1:
            raise ValueError("The fraction must lie in (0, 1).")
        targets: List[float] = [
            fraction
            * min(
                (
                    factor.profile.support_radius**2
                    for coefficient in form.coefficients(data.index)
                    for factor in coefficient.factors
                    if factor.variable == m
                ),
                default=1.0,
            )
            for m in range(1, matrix.n + 1)
        ]
        return tuple(
            prod(t**power for t, power in zip(targets, row))
            for row in matrix.entries
        )

    def residue_function_pn(
        self, *, matrix: ExponentMatrix, eps: Sequence[float], form: TestForm
    ) -> complex:
        data: IndexData = self._full_index(matrix=matrix)
        radii: Tuple[float, ...] = self.torus_radii(matrix=matrix, eps=eps)
        profiles = ProfileService()

        total: complex = 0j
        for coefficient in form.coefficients(data.index):
            term: complex = complex(coefficient.weight)
            for factor in coefficient.factors:
                t: float = radii[factor.variable - 1]
                if t >= factor.profile.support_radius**2:
                    raise RadiiOutsideSupportError(
                        f"The torus radius of variable {factor.variable} "
                        f"lies outside the support of its profile at "
                        f"eps={tuple(eps)}."
                    )
                if factor.holomorphic != (
                    factor.antiholomorphic
                    + matrix.column_sum(factor.variable)
                    - 1
                ):
                    term = 0j
                    break
                term *= float(
                    profiles.value(profile=factor.profile, t=np.array(t))
                ) * t ** factor.antiholomorphic
            total += term

        return data.delta_sign * total

    def residue_average_pn(
        self,
        *,
        matrix: ExponentMatrix,
        eta: float,
        form: TestForm,
        samples: int = SIMPLEX_SAMPLES,
        seed: Optional[int] = None,
    ) -> ResidueAverage:
        """Mean over eps drawn uniformly from {eps > 0, sum eps = eta}."""
        generator = np.random.default_rng(
            settings.RESIDUE_SEED if seed is None else seed
        )
        points: np.ndarray = (
            generator.dirichlet(np.ones(matrix.p), size=samples) * eta
        )
        values: List[complex] = [
            self.residue_function_pn(matrix=matrix, eps=list(point), form=form)
            for point in points
        ]
        mean: complex = complex(np.mean(values))
        spread: float = float(
            max(abs(value - mean) for value in values) if values else 0.0
        )
        logger.debug(
            "Residue average at eta=%.3g over %d points: spread %.3e",
            eta,
            samples,
            spread,
        )
        return ResidueAverage(
            value=mean,
            spread=spread,
            eta=eta,
            samples=tuple(tuple(float(x) for x in point) for point in points),
        )
