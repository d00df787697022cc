import logging
from functools import reduce
from math import ceil, lcm, log, prod
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from django.conf import settings

from apps.mellin.dataclasses import MBBatch
from apps.mellin.services import MellinBarnesService
from apps.pairing.dataclasses import RadialDensity, RadialIntegral
from apps.pairing.exceptions import QuadratureNonconvergentError
from apps.pairing.services.profile_service import ProfileService
from apps.structure.dataclasses import MBSpec

logger = logging.getLogger(__name__)

MELLIN_RELATIVE_ERROR: float = 1e-12
ABSOLUTE_FLOOR: float = 1e-14


class RadialQuadratureService:
    """Radial integrals of prod_v t_v^e_v g_v(t_v) * F over [0, R_v^2].

    Variables that F does not see separate into profile Mellin
    transforms. The rest are summed on a tensor trapezoid grid in
    u = log t, hanging down from u = log R^2 with a shared step that is
    halved until two levels agree.
    """

    def decay(
        self, *, variable: int, exponent: int, spec: Optional[MBSpec]
    ) -> float:
        rate: float = float(exponent + 1)
        if rate <= 0 and spec is not None and variable in spec.active:
            position: int = spec.active.index(variable)
            positive = [
                row[position] for row in spec.gamma_rows if row[position] > 0
            ]
            if positive:
                rate += 1 / float(max(positive))
        if rate <= 0:
            raise QuadratureNonconvergentError(
                f"t^{exponent} is not integrable at 0 in variable "
                f"{variable}."
            )
        return rate

    def coupled_variables(self, *, spec: Optional[MBSpec]) -> Tuple[int, ...]:
        if spec is None:
            return ()
        return tuple(
            sorted(
                {
                    variable
                    for pairs in spec.power_exponents
                    for variable, exponent in pairs
                    if exponent != 0
                }
            )
        )

    def integrate(
        self,
        *,
        densities: Sequence[RadialDensity],
        spec: Optional[MBSpec] = None,
    ) -> RadialIntegral:
        coupled: Set[int] = set(self.coupled_variables(spec=spec))
        missing: Set[int] = coupled - {d.variable for d in densities}
        if missing:
            raise ValueError(
                f"F depends on variables {sorted(missing)} without a density."
            )

        separated: float = 1.0
        for density in densities:
            if density.variable in coupled:
                continue
            separated *= ProfileService().mellin_transform(
                profile=density.profile, sigma=density.exponent + 1
            ).real
        separated_error: float = MELLIN_RELATIVE_ERROR * abs(separated)

        tensor: List[RadialDensity] = sorted(
            (d for d in densities if d.variable in coupled),
            key=lambda density: density.variable,
        )
        if spec is None or not tensor:
            return RadialIntegral(
                value=separated, abs_error_estimate=separated_error, nodes=0
            )

        inner: RadialIntegral = self._refine(densities=tensor, spec=spec)
        return RadialIntegral(
            value=separated * inner.value,
            abs_error_estimate=abs(separated) * inner.abs_error_estimate
            + separated_error * abs(inner.value),
            nodes=inner.nodes,
            step=inner.step,
        )

    def _axis(
        self, *, density: RadialDensity, step: float
    ) -> Tuple[np.ndarray, np.ndarray, float]:
        top: float = 2 * log(density.profile.support_radius)
        span: float = settings.RESIDUE_RADIAL_LOG_MARGIN / density.decay
        k: np.ndarray = np.arange(ceil(span / step) + 1)
        u: np.ndarray = top - step * k
        weights: np.ndarray = (
            step
            * np.exp((density.exponent + 1) * u)
            * ProfileService().value(profile=density.profile, t=np.exp(u))
        )
        return k, weights, top

    def _tensor_sum(
        self,
        *,
        densities: Sequence[RadialDensity],
        spec: MBSpec,
        step: float,
    ) -> Tuple[float, float]:
        axes = [self._axis(density=d, step=step) for d in densities]
        position: Dict[int, int] = {
            density.variable: axis for axis, density in enumerate(densities)
        }
        shape: Tuple[int, ...] = tuple(len(k) for k, _, _ in axes)
        grids = np.meshgrid(
            *[k for k, _, _ in axes], indexing="ij", sparse=True
        )

        # log x_j = offset_j - step * m_j / D_j with integer m_j
        offsets: List[float] = []
        denominators: List[int] = []
        numerators: List[np.ndarray] = []
        for pairs in spec.power_exponents:
            denominator: int = lcm(*(e.denominator for _, e in pairs))
            offsets.append(
                sum(float(e) * axes[position[v]][2] for v, e in pairs if e)
            )
            denominators.append(denominator)
            numerators.append(
                sum(
                    int(e * denominator) * grids[position[v]]
                    for v, e in pairs
                    if e
                )
                * np.ones(shape, dtype=np.int64)
            )

        stacked: np.ndarray = np.stack(
            [m.ravel() for m in numerators], axis=1
        )
        unique, inverse = np.unique(stacked, axis=0, return_inverse=True)
        log_bases: np.ndarray = np.array(offsets) - step * unique / np.array(
            denominators, dtype=float
        )
        batch: MBBatch = MellinBarnesService().evaluate_many(
            spec=spec, log_bases=log_bases
        )
        values: np.ndarray = batch.values[inverse.reshape(-1)].reshape(shape)

        weights: np.ndarray = reduce(
            np.multiply.outer, [w for _, w, _ in axes]
        )
        mass: float = float(np.sum(np.abs(weights)))
        return float(np.sum(weights * values)), mass * batch.abs_error_estimate

    def _refine(
        self, *, densities: Sequence[RadialDensity], spec: MBSpec
    ) -> RadialIntegral:
        step: float = settings.RESIDUE_RADIAL_INITIAL_STEP
        previous: Optional[float] = None

        for _ in range(settings.RESIDUE_RADIAL_LIMIT + 1):
            nodes: int = prod(
                ceil(settings.RESIDUE_RADIAL_LOG_MARGIN / d.decay / step) + 1
                for d in densities
            )
            if nodes > settings.RESIDUE_RADIAL_MAX_NODES:
                break
            value, mb_error = self._tensor_sum(
                densities=densities, spec=spec, step=step
            )
            if previous is not None:
                change: float = abs(value - previous)
                if change <= max(
                    settings.RESIDUE_RADIAL_EPSREL * abs(value),
                    10 * mb_error,
                    ABSOLUTE_FLOOR,
                ):
                    logger.debug(
                        "Radial grid over %s settled: step %.4f, %d nodes",
                        [d.variable for d in densities],
                        step,
                        nodes,
                    )
                    return RadialIntegral(
                        value=value,
                        abs_error_estimate=change + mb_error,
                        nodes=nodes,
                        step=step,
                    )
            previous = value
            step /= 2

        raise QuadratureNonconvergentError(
            "Radial refinement over variables "
            f"{[d.variable for d in densities]} stalled at step {step}."
        )
