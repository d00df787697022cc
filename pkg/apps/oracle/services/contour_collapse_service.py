import logging
from math import ceil, factorial, log, pi
from typing import List, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings
from scipy.special import loggamma

from apps.cones.dataclasses import ConeReport
from apps.cones.services import ConeService
from apps.linalg.dataclasses import ExponentMatrix, IndexData
from apps.linalg.services import ExactLinalgService
from apps.oracle.dataclasses import ContourCollapseReport, OracleValue
from apps.oracle.exceptions import ContourCollapseSkippedError
from apps.oracle.services.component_service import ComponentService
from apps.oracle.services.extrapolation_service import ExtrapolationService
from apps.oracle.services.regularized_integral_service import (
    RegularizedIntegralService,
)
from apps.pairing.dataclasses import (
    RadialProfile,
    SeparableCoefficient,
    TestForm,
)
from apps.pairing.services import ProfileService

logger = logging.getLogger(__name__)

CONTOUR_SHIFTS: Tuple[float, ...] = (0.25, 0.5, 0.1)
MAX_CONTOUR_DIMENSION: int = 2
COLLAPSE_TOLERANCE: float = 0.02
VANISHING_RATIO: float = 1e-3
SIGMA_DECIMALS: int = 12


class ContourCollapseService:
    """Mellin-Barnes form of the I-component of the regularized integral.

    With lambda_m = <alpha^m, s> for m in I the component reads
    (1/(2 pi i)^p) integral tau^-|s| Gamma(|s| + 1) prod_l Gamma(1 - s_l)
    Gamma^I(s) ds. Taking the residues at lambda_J = 0 leaves a
    (p - q)-fold integral that no longer depends on tau.
    """

    def __init__(self) -> None:
        self.components = ComponentService()
        self.profiles = ProfileService()

    def _sigmas(
        self,
        *,
        matrix: ExponentMatrix,
        index: Sequence[int],
        coefficient: SeparableCoefficient,
        s: np.ndarray,
    ) -> List[np.ndarray]:
        return [
            factor.antiholomorphic
            + 1
            - (factor.variable in index)
            + s @ np.array(matrix.column(factor.variable), dtype=float)
            for factor in coefficient.factors
        ]

    def _mellin(
        self, *, profile: RadialProfile, sigma: np.ndarray
    ) -> np.ndarray:
        unique, inverse = np.unique(
            np.round(sigma.ravel(), SIGMA_DECIMALS), return_inverse=True
        )
        values = np.asarray(
            self.profiles.mellin_transform(profile=profile, sigma=unique)
        )
        return values[inverse.reshape(-1)].reshape(sigma.shape)

    def _inverse(self, *, data: IndexData) -> np.ndarray:
        assert data.inverse is not None
        return np.array(
            [[float(value) for value in row] for row in data.inverse]
        )

    def admissible_shift(
        self,
        *,
        matrix: ExponentMatrix,
        data: IndexData,
        coefficients: Sequence[SeparableCoefficient],
        shift: np.ndarray,
        poles: Sequence[int] = (),
    ) -> bool:
        """Real parts keep every Gamma and Mellin factor off its poles.

        Variables in poles sit on the Mellin pole being collapsed.
        """
        s: np.ndarray = shift @ self._inverse(data=data)
        if np.any(s >= 1) or s.sum() <= -1:
            return False
        for coefficient in coefficients:
            sigmas = self._sigmas(
                matrix=matrix, index=data.index, coefficient=coefficient, s=s
            )
            for factor, sigma in zip(coefficient.factors, sigmas):
                if factor.variable in poles:
                    continue
                if factor.profile.value_at_zero != 0 and sigma <= 0:
                    return False
        return True

    def _axis(self, *, height: float, step: float) -> np.ndarray:
        count: int = ceil(height / step)
        return step * np.arange(-count, count + 1)

    def _nodes(
        self, *, axis: np.ndarray, shift: np.ndarray, free: Sequence[int]
    ) -> np.ndarray:
        """lambda = shift + i y with y on the grid in the free positions."""
        grids = np.meshgrid(*([axis] * len(free)), indexing="ij")
        heights: np.ndarray = np.zeros((axis.size ** len(free), shift.size))
        for position, grid in zip(free, grids):
            heights[:, position] = grid.ravel()
        return shift + 1j * heights

    def _gamma_weights(
        self,
        *,
        matrix: ExponentMatrix,
        data: IndexData,
        coefficients: Sequence[SeparableCoefficient],
        s: np.ndarray,
        poles: Sequence[int] = (),
    ) -> np.ndarray:
        """prod_l Gamma(1 - s_l) Gamma^I(s), residues taken at poles."""
        constant: complex = (
            self.components.bochner_martinelli_constant(p=matrix.p)
            / factorial(matrix.p - 1)
            * float(data.delta)
            * self.components.orientation_sign(
                index=data.index, p=matrix.p, n=matrix.n
            )
            * (-2j * pi) ** matrix.n
        )
        gamma_i: np.ndarray = np.zeros(s.shape[0], dtype=complex)
        for coefficient in coefficients:
            if not self.components.admissible(
                matrix=matrix, index=data.index, coefficient=coefficient
            ):
                continue
            value: np.ndarray = np.full(
                s.shape[0], complex(coefficient.weight)
            )
            sigmas = self._sigmas(
                matrix=matrix, index=data.index, coefficient=coefficient, s=s
            )
            for factor, sigma in zip(coefficient.factors, sigmas):
                if factor.variable not in poles:
                    value = value * self._mellin(
                        profile=factor.profile, sigma=sigma
                    )
                elif factor.antiholomorphic == 0:
                    value = value * factor.profile.value_at_zero
                else:
                    value = value * 0
            gamma_i += value

        return constant * gamma_i * np.exp(loggamma(1 - s).sum(axis=1))

    def _shift(
        self,
        *,
        matrix: ExponentMatrix,
        data: IndexData,
        coefficients: Sequence[SeparableCoefficient],
        J: Sequence[int],
    ) -> np.ndarray:
        pole_positions: List[int] = [data.index.index(j) for j in J]
        for c in CONTOUR_SHIFTS:
            full: np.ndarray = np.full(matrix.p, c)
            collapsed: np.ndarray = full.copy()
            collapsed[pole_positions] = 0.0
            if self.admissible_shift(
                matrix=matrix, data=data, coefficients=coefficients, shift=full
            ) and self.admissible_shift(
                matrix=matrix,
                data=data,
                coefficients=coefficients,
                shift=collapsed,
                poles=J,
            ):
                return full
        raise ContourCollapseSkippedError(
            f"No shift in {CONTOUR_SHIFTS} keeps the contours of "
            f"I={data.index} inside the strip of convergence."
        )

    def contour_collapse_check(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        index: Sequence[int],
        taus: Optional[Sequence[float]] = None,
        height: Optional[float] = None,
        step: Optional[float] = None,
    ) -> ContourCollapseReport:
        height = settings.RESIDUE_CONTOUR_HEIGHT if height is None else height
        step = settings.RESIDUE_CONTOUR_STEP if step is None else step
        index = tuple(index)
        if matrix.p > MAX_CONTOUR_DIMENSION:
            raise ContourCollapseSkippedError(
                f"Contour integrals are summed for p <= "
                f"{MAX_CONTOUR_DIMENSION}, got p={matrix.p}."
            )

        data: IndexData = ExactLinalgService().index_data(
            matrix=matrix, index=index
        )
        if data.degenerate:
            raise ContourCollapseSkippedError(
                f"Delta_I vanishes for I={index}."
            )
        report: ConeReport = ConeService().cone_report(
            matrix=matrix, data=data
        )
        if report.q == matrix.p:
            raise ContourCollapseSkippedError(
                f"q = p for I={index}: nothing is left to integrate."
            )

        coefficients = form.coefficients(index)
        taus = taus or RegularizedIntegralService().default_taus(
            matrix=matrix, form=form
        )
        shift: np.ndarray = self._shift(
            matrix=matrix,
            data=data,
            coefficients=coefficients,
            J=report.J,
        )
        inverse: np.ndarray = self._inverse(data=data)
        axis: np.ndarray = self._axis(height=height, step=step)
        jacobian: float = 1 / abs(float(data.delta))

        lam: np.ndarray = self._nodes(
            axis=axis, shift=shift, free=range(matrix.p)
        )
        s: np.ndarray = lam @ inverse
        weights: np.ndarray = self._gamma_weights(
            matrix=matrix, data=data, coefficients=coefficients, s=s
        ) * np.exp(loggamma(1 + s.sum(axis=1)))
        scale: float = jacobian * (step / (2 * pi)) ** matrix.p
        total: np.ndarray = s.sum(axis=1)
        samples: List[Tuple[float, complex]] = [
            (
                float(tau),
                scale * complex(np.sum(weights * np.exp(-total * log(tau)))),
            )
            for tau in taus
        ]
        full_contour: OracleValue = ExtrapolationService().tau_extrapolate(
            samples=samples
        )

        if report.q == 0:
            collapsed: complex = 0j
            gap: float = abs(full_contour.value)
            tolerance: float = VANISHING_RATIO * abs(samples[0][1])
        else:
            pole_positions: List[int] = [index.index(j) for j in report.J]
            free: List[int] = [
                position
                for position in range(matrix.p)
                if position not in pole_positions
            ]
            base: np.ndarray = shift.copy()
            base[pole_positions] = 0.0
            s = self._nodes(axis=axis, shift=base, free=free) @ inverse
            # |s| vanishes on lambda_J = 0
            collapsed = (
                jacobian
                * (step / (2 * pi)) ** len(free)
                * complex(
                    np.sum(
                        self._gamma_weights(
                            matrix=matrix,
                            data=data,
                            coefficients=coefficients,
                            s=s,
                            poles=report.J,
                        )
                    )
                )
            )
            gap = abs(full_contour.value - collapsed) / max(
                abs(collapsed), 1e-300
            )
            tolerance = COLLAPSE_TOLERANCE

        logger.info(
            "Contour collapse for I=%s, q=%d: full %s, collapsed %s",
            index,
            report.q,
            full_contour.value,
            collapsed,
        )
        return ContourCollapseReport(
            index=index,
            q=report.q,
            shift=tuple(float(c) for c in shift),
            full_contour=full_contour,
            collapsed=collapsed,
            gap=gap,
            tolerance=tolerance,
        )
