import logging
from math import inf, log
from typing import List, Sequence, Tuple

import numpy as np

from apps.oracle.dataclasses import OracleValue
from apps.oracle.exceptions import NonconvergentFitError

logger = logging.getLogger(__name__)

MIN_SAMPLES: int = 4
FIT_SAMPLES: int = 5
THETA_BOUNDS: Tuple[float, float] = (0.05, 4.0)
CONVERGED_RATIO: float = 1e-12
RESIDUAL_LIMIT: float = 0.05


class ExtrapolationService:

    def tau_extrapolate(
        self, *, samples: Sequence[Tuple[float, complex]]
    ) -> OracleValue:
        """c0 of value(tau) = c0 + c1 tau^theta + c2 tau^(2 theta).

        theta comes from the last three samples; a second fit replaces
        tau^(2 theta) by tau^theta log(tau) and the better fit wins.
        """
        if len(samples) < MIN_SAMPLES:
            raise ValueError(
                f"Extrapolation needs at least {MIN_SAMPLES} samples, got "
                f"{len(samples)}."
            )
        ordered: List[Tuple[float, complex]] = sorted(
            ((float(tau), complex(value)) for tau, value in samples),
            key=lambda sample: -sample[0],
        )
        if ordered[-1][0] <= 0:
            raise ValueError("Every tau must be positive.")

        taus: np.ndarray = np.array([tau for tau, _ in ordered])
        values: np.ndarray = np.array([value for _, value in ordered])
        sequence: Tuple[Tuple[float, complex], ...] = tuple(ordered)
        spread: float = float(np.ptp(values.real) + np.ptp(values.imag))
        scale: float = float(np.max(np.abs(values)))

        if spread == 0:
            return OracleValue(
                value=complex(values[-1]),
                tau_sequence=sequence,
                extrapolated=False,
                abs_error_estimate=0.0,
            )

        previous: complex = complex(values[-2] - values[-3])
        last: complex = complex(values[-1] - values[-2])
        if abs(last) <= CONVERGED_RATIO * scale:
            return OracleValue(
                value=complex(values[-1]),
                tau_sequence=sequence,
                extrapolated=False,
                abs_error_estimate=abs(last),
            )

        ratio: float = abs(last) / abs(previous) if previous else inf
        if ratio >= 1:
            raise NonconvergentFitError(
                f"Successive differences do not shrink (ratio {ratio:.3g})."
            )
        theta: float = log(ratio) / log(taus[-1] / taus[-2])
        theta = min(max(theta, THETA_BOUNDS[0]), THETA_BOUNDS[1])

        tail_taus: np.ndarray = taus[-FIT_SAMPLES:]
        tail_values: np.ndarray = values[-FIT_SAMPLES:]
        power: np.ndarray = tail_taus**theta
        ones: np.ndarray = np.ones_like(power)
        fits: List[Tuple[float, complex]] = []
        for design in (
            np.stack([ones, power, power**2], axis=1),
            np.stack([ones, power, power * np.log(tail_taus)], axis=1),
        ):
            coefficients, *_ = np.linalg.lstsq(
                design.astype(complex), tail_values, rcond=None
            )
            residual: float = float(
                np.max(np.abs(design @ coefficients - tail_values))
            )
            fits.append((residual, complex(coefficients[0])))

        best_residual, best_value = min(fits, key=lambda fit: fit[0])
        if best_residual > RESIDUAL_LIMIT * spread:
            raise NonconvergentFitError(
                f"Fit residual {best_residual:.3g} exceeds "
                f"{RESIDUAL_LIMIT:.0%} of the spread {spread:.3g}."
            )

        logger.debug(
            "Extrapolated %d samples: theta %.3f, residual %.2e",
            len(ordered),
            theta,
            best_residual,
        )
        return OracleValue(
            value=best_value,
            tau_sequence=sequence,
            extrapolated=True,
            abs_error_estimate=max(
                best_residual, abs(fits[0][1] - fits[1][1])
            ),
            theta=theta,
            fit_residual=best_residual,
        )
