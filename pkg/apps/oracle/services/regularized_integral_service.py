import logging
from math import ceil, log, prod
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings

from apps.linalg.dataclasses import ExponentMatrix
from apps.oracle.dataclasses import OracleValue
from apps.oracle.exceptions import OracleQuadratureError
from apps.oracle.services.component_service import ComponentService
from apps.oracle.services.extrapolation_service import ExtrapolationService
from apps.pairing.dataclasses import SeparableCoefficient, TestForm
from apps.pairing.services import ProfileService

logger = logging.getLogger(__name__)

CHUNK_ELEMENTS: int = 1 << 21

Separable = Tuple[complex, SeparableCoefficient]


class RegularizedIntegralService:
    """p c_p integral of tau dbar f-bar_1 ^ ... ^ phi / (|f|^2 + tau)^(p+1).

    After the angular integrals every surviving coefficient leaves
    tau prod_m t_m^a_m g_m(t_m) / (sum_k t^alpha_k + tau)^(p+1) over
    the positive orthant, summed here on a trapezoid grid in log t.
    """

    def natural_scale(
        self, *, matrix: ExponentMatrix, form: TestForm
    ) -> float:
        radius: float = max(
            (
                factor.profile.support_radius
                for coefficients in form.components.values()
                for coefficient in coefficients
                for factor in coefficient.factors
            ),
            default=1.0,
        )
        degree: int = max(sum(row) for row in matrix.entries)
        return radius ** (2 * degree)

    def default_taus(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        ratio: Optional[float] = None,
        count: Optional[int] = None,
    ) -> Tuple[float, ...]:
        ratio = settings.RESIDUE_TAU_RATIO if ratio is None else ratio
        count = settings.RESIDUE_TAU_COUNT if count is None else count
        scale: float = self.natural_scale(matrix=matrix, form=form)
        return tuple(scale * ratio**k for k in range(1, count + 1))

    def separable_terms(
        self, *, matrix: ExponentMatrix, form: TestForm
    ) -> List[Separable]:
        components = ComponentService()
        constant: complex = (
            matrix.p
            * components.bochner_martinelli_constant(p=matrix.p)
            * (-2j * np.pi) ** matrix.n
        )
        terms: List[Separable] = []
        for data, coefficients in components.components(
            matrix=matrix, form=form
        ):
            sign: int = components.orientation_sign(
                index=data.index, p=matrix.p, n=matrix.n
            )
            for coefficient in coefficients:
                if components.admissible(
                    matrix=matrix, index=data.index, coefficient=coefficient
                ):
                    terms.append(
                        (
                            constant
                            * sign
                            * float(data.delta)
                            * coefficient.weight,
                            coefficient,
                        )
                    )
        return terms

    def _grid(
        self, *, terms: Sequence[Separable], tau_min: float, n: int
    ) -> Tuple[float, List[np.ndarray]]:
        tops: List[float] = [
            max(
                2 * log(coefficient.factor(m).profile.support_radius)
                for _, coefficient in terms
            )
            for m in range(1, n + 1)
        ]
        margin: float = settings.RESIDUE_ORACLE_LOG_MARGIN
        bottoms: List[float] = [
            min(log(tau_min), top) - margin for top in tops
        ]

        step: float = settings.RESIDUE_ORACLE_LOG_STEP
        total: int = prod(
            ceil((top - bottom) / step) + 1
            for top, bottom in zip(tops, bottoms)
        )
        if total > settings.RESIDUE_ORACLE_MAX_NODES:
            step *= (total / settings.RESIDUE_ORACLE_MAX_NODES) ** (1 / n)
            logger.warning(
                "Coarsened the oracle grid to step %.3f for %d variables",
                step,
                n,
            )

        axes: List[np.ndarray] = [
            top - step * np.arange(ceil((top - bottom) / step) + 1)
            for top, bottom in zip(tops, bottoms)
        ]
        return step, axes

    def samples(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        taus: Sequence[float],
    ) -> List[Tuple[float, complex]]:
        if any(tau <= 0 for tau in taus):
            raise ValueError("Every tau must be positive.")
        terms: List[Separable] = self.separable_terms(
            matrix=matrix, form=form
        )
        if not terms:
            return [(float(tau), 0j) for tau in taus]

        n: int = matrix.n
        step, axes = self._grid(terms=terms, tau_min=min(taus), n=n)
        profiles = ProfileService()
        weights: List[List[np.ndarray]] = [
            [
                step
                * np.exp((coefficient.factor(m).holomorphic + 1) * axis)
                * profiles.value(
                    profile=coefficient.factor(m).profile, t=np.exp(axis)
                )
                for m, axis in enumerate(axes, start=1)
            ]
            for _, coefficient in terms
        ]

        exponents: np.ndarray = np.array(matrix.entries, dtype=float)
        rest_shape: Tuple[int, ...] = tuple(len(axis) for axis in axes[1:])
        rest_grids = np.meshgrid(*axes[1:], indexing="ij", sparse=True)
        # <alpha_k, u> without the first variable, one array per row k
        partial: List[np.ndarray] = [
            sum(
                (row[m] * grid for m, grid in enumerate(rest_grids, start=1)),
                np.zeros(rest_shape),
            )
            for row in exponents
        ]

        totals: Dict[float, complex] = {float(tau): 0j for tau in taus}
        chunk: int = max(1, CHUNK_ELEMENTS // max(1, prod(rest_shape)))
        for start in range(0, len(axes[0]), chunk):
            first: np.ndarray = axes[0][start : start + chunk]
            norm: np.ndarray = sum(
                np.exp(
                    row[0] * first.reshape((-1,) + (1,) * (n - 1)) + part
                )
                for row, part in zip(exponents, partial)
            )
            for tau in totals:
                kernel: np.ndarray = tau * (norm + tau) ** -(matrix.p + 1)
                for (scale, _), axis_weights in zip(terms, weights):
                    reduced: np.ndarray = kernel
                    for weight in reversed(axis_weights[1:]):
                        reduced = reduced @ weight
                    totals[tau] += scale * complex(
                        reduced @ axis_weights[0][start : start + chunk]
                    )

        if not all(np.isfinite(value) for value in totals.values()):
            raise OracleQuadratureError(
                "The regularized integrand overflowed on the log grid."
            )
        logger.debug(
            "Regularized integral over %d terms at %d taus, step %.3f",
            len(terms),
            len(totals),
            step,
        )
        return [(float(tau), totals[float(tau)]) for tau in taus]

    def regularized_T(
        self, *, matrix: ExponentMatrix, form: TestForm, tau: float
    ) -> complex:
        ((_, value),) = self.samples(matrix=matrix, form=form, taus=[tau])
        return value

    def extrapolate(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        taus: Optional[Sequence[float]] = None,
    ) -> OracleValue:
        taus = taus or self.default_taus(matrix=matrix, form=form)
        return ExtrapolationService().tau_extrapolate(
            samples=self.samples(matrix=matrix, form=form, taus=taus)
        )
