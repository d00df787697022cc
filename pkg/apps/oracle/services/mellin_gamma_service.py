import logging
from math import factorial
from typing import List, Optional, Sequence, Tuple

import numpy as np

from apps.linalg.dataclasses import ExponentMatrix
from apps.oracle.dataclasses import PoleProbeReport, SegmentScanReport
from apps.oracle.exceptions import (
    NonintegrableParametersError,
    PoleProbePreconditionError,
)
from apps.oracle.services.component_service import ComponentService
from apps.pairing.dataclasses import SeparableCoefficient, TestForm
from apps.pairing.services import ProfileService

logger = logging.getLogger(__name__)

PROBE_DELTAS: Tuple[float, ...] = (1e-1, 1e-2, 1e-3)
STABILITY_TOLERANCE: float = 0.05
VANISHING_RATIO: float = 0.05
HYPERPLANE_TOLERANCE: float = 1e-12
SEGMENT_POINTS: int = 17
SETTLE_TOLERANCE: float = 0.25
CURVATURE_FLOOR: float = 1e-9


class MellinGammaService:
    """Gamma(s, phi) = c_p/(p-1)! integral prod |f_k|^(2(s_k-1)) ... phi.

    Per I and surviving coefficient the integral factors into profile
    Mellin transforms M_m(sigma_m), sigma_m = b_m + 1 - [m in I] +
    <alpha^m, s>.
    """

    def sigmas(
        self,
        *,
        matrix: ExponentMatrix,
        index: Sequence[int],
        coefficient: SeparableCoefficient,
        s: Sequence[complex],
    ) -> List[complex]:
        sigmas: List[complex] = []
        for factor in coefficient.factors:
            column = matrix.column(factor.variable)
            sigma: complex = (
                factor.antiholomorphic
                + 1
                - (factor.variable in index)
                + sum(a * s_k for a, s_k in zip(column, s))
            )
            if factor.profile.value_at_zero != 0 and sigma.real <= 0:
                raise NonintegrableParametersError(
                    f"Variable {factor.variable} of I={tuple(index)} has "
                    f"Re sigma = {sigma.real:.3g} <= 0 at s={tuple(s)}."
                )
            sigmas.append(sigma)
        return sigmas

    def mellin_gamma(
        self, *, matrix: ExponentMatrix, s: Sequence[complex], form: TestForm
    ) -> complex:
        if len(s) != matrix.p:
            raise ValueError(f"s must have p={matrix.p} entries.")
        s = [complex(value) for value in s]
        components = ComponentService()
        profiles = ProfileService()
        constant: complex = (
            components.bochner_martinelli_constant(p=matrix.p)
            / factorial(matrix.p - 1)
            * (-2j * np.pi) ** matrix.n
        )

        total: complex = 0j
        for data, coefficients in components.components(
            matrix=matrix, form=form
        ):
            sign: int = components.orientation_sign(
                index=data.index, p=matrix.p, n=matrix.n
            )
            for coefficient in coefficients:
                if not components.admissible(
                    matrix=matrix, index=data.index, coefficient=coefficient
                ):
                    continue
                value: complex = (
                    constant * sign * float(data.delta) * coefficient.weight
                )
                for factor, sigma in zip(
                    coefficient.factors,
                    self.sigmas(
                        matrix=matrix,
                        index=data.index,
                        coefficient=coefficient,
                        s=s,
                    ),
                ):
                    value *= complex(
                        profiles.mellin_transform(
                            profile=factor.profile, sigma=sigma
                        )
                    )
                total += value
        return total

    def pole_probe(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        column: int,
        direction: Sequence[float],
        base: Optional[Sequence[float]] = None,
        deltas: Sequence[float] = PROBE_DELTAS,
    ) -> PoleProbeReport:
        """<alpha^k, s> Gamma(s) along s = base + delta * direction."""
        alpha = np.array(matrix.column(column), dtype=float)
        heading = np.array(direction, dtype=float)
        origin = np.zeros(matrix.p) if base is None else np.array(base)
        if heading.shape != (matrix.p,) or origin.shape != (matrix.p,):
            raise ValueError(f"Probe vectors must have p={matrix.p} entries.")
        if abs(alpha @ heading) <= HYPERPLANE_TOLERANCE:
            raise PoleProbePreconditionError(
                f"The direction {tuple(direction)} lies in the hyperplane "
                f"<alpha^{column}, s> = 0."
            )
        if abs(alpha @ origin) > HYPERPLANE_TOLERANCE:
            raise PoleProbePreconditionError(
                "The base point is off the hyperplane "
                f"<alpha^{column}, s> = 0."
            )

        products: List[complex] = []
        for delta in deltas:
            s: np.ndarray = origin + delta * heading
            products.append(
                complex(alpha @ s)
                * self.mellin_gamma(matrix=matrix, s=list(s), form=form)
            )

        largest: float = max(abs(product) for product in products)
        vanishing: bool = largest == 0 or abs(
            products[-1]
        ) <= VANISHING_RATIO * abs(products[0])
        settled: List[complex] = (
            products[1:] if len(products) > 2 else products
        )
        spread: float = max(abs(a - b) for a in settled for b in settled)
        stabilized: bool = (
            not vanishing
            and spread <= STABILITY_TOLERANCE * abs(products[-1])
        )

        logger.info(
            "Pole probe of column %d: products %s, stabilized %s",
            column,
            products,
            stabilized,
        )
        return PoleProbeReport(
            column=column,
            base=tuple(float(x) for x in origin),
            direction=tuple(float(x) for x in heading),
            deltas=tuple(deltas),
            products=tuple(products),
            stabilized=stabilized,
            vanishing=vanishing,
        )

    def segment_scan(
        self,
        *,
        matrix: ExponentMatrix,
        form: TestForm,
        start: Sequence[complex],
        end: Sequence[complex],
        points: int = SEGMENT_POINTS,
    ) -> SegmentScanReport:
        """Gamma along a segment inside Re s > 0.

        Second differences at step h and 2h are compared over the same
        centers; near a pole the coarse ones blow up and the two disagree.
        """
        head = np.array(start, dtype=complex)
        tail = np.array(end, dtype=complex)
        if head.shape != (matrix.p,) or tail.shape != (matrix.p,):
            raise ValueError(f"Segment ends must have p={matrix.p} entries.")
        if points < 3:
            raise ValueError("A segment scan needs at least 3 points.")
        if min(head.real.min(), tail.real.min()) <= 0:
            raise PoleProbePreconditionError(
                "The segment must stay in the open orthant Re s > 0."
            )

        parameters: np.ndarray = np.linspace(0.0, 1.0, 2 * points - 1)
        values: np.ndarray = np.array(
            [
                self.mellin_gamma(
                    matrix=matrix, s=list(head + t * (tail - head)), form=form
                )
                for t in parameters
            ]
        )
        step: float = float(parameters[1])
        fine: np.ndarray = (
            values[:-2] - 2 * values[1:-1] + values[2:]
        ) / step**2
        coarse: np.ndarray = (
            values[:-4:2] - 2 * values[2:-2:2] + values[4::2]
        ) / (2 * step) ** 2

        drift: float = float("inf")
        pole_free: bool = False
        if np.all(np.isfinite(values)):
            shared: np.ndarray = fine[1::2]
            drift = float(np.max(np.abs(coarse - shared), initial=0.0))
            floor: float = CURVATURE_FLOOR * max(
                1.0, float(np.max(np.abs(values)))
            )
            pole_free = drift <= (
                SETTLE_TOLERANCE * float(np.max(np.abs(shared), initial=0.0))
                + floor
            )

        logger.info(
            "Segment scan %s -> %s: drift %.3e, pole free %s",
            tuple(start),
            tuple(end),
            drift,
            pole_free,
        )
        return SegmentScanReport(
            start=tuple(complex(x) for x in head),
            end=tuple(complex(x) for x in tail),
            parameters=tuple(float(t) for t in parameters),
            values=tuple(complex(value) for value in values),
            second_differences=tuple(complex(value) for value in fine),
            drift=drift,
            pole_free=pole_free,
        )
