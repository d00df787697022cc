import logging
from fractions import Fraction
from math import ceil, factorial, pi
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from django.conf import settings
from scipy.special import gamma, loggamma

from apps.mellin.dataclasses import (
    MBBatch,
    MBValue,
    SelfcheckPoint,
    SelfcheckReport,
)
from apps.mellin.exceptions import (
    ContourPoleError,
    MellinBarnesNonconvergentError,
    NonSimplePoleError,
)
from apps.mellin.services.gamma_service import GammaService
from apps.structure.dataclasses import MBSpec

logger = logging.getLogger(__name__)

SELFCHECK_TOLERANCE: float = 1e-6
GAMMA_TOLERANCE: float = 1e-12
SYMMETRY_TOLERANCE: float = 1e-8
CHUNK_ELEMENTS: int = 1 << 22

STANDARD_PAIR: MBSpec = MBSpec(
    dim=1,
    active=(1,),
    gamma_rows=((Fraction(1),), (Fraction(-1),)),
    power_exponents=(((1, Fraction(1)),),),
)


class MellinBarnesService:
    """Trapezoidal evaluation of F along the imaginary axes.

    F(x) = (1/2 pi)^d * integral over R^d of
    prod_l Gamma(1 - i sum_j c_lj y_j) * prod_j x_j^(i y_j) dy.
    """

    def rows(self, *, spec: MBSpec) -> np.ndarray:
        return np.array(
            [[float(value) for value in row] for row in spec.gamma_rows],
            dtype=float,
        ).reshape(len(spec.gamma_rows), spec.dim)

    def log_bases(
        self, *, spec: MBSpec, log_t: Mapping[int, np.ndarray]
    ) -> np.ndarray:
        """Stack log x_j over arrays of log t_v; last axis is j."""
        columns: List[np.ndarray] = []
        for pairs in spec.power_exponents:
            column = sum(
                float(exponent) * log_t[variable]
                for variable, exponent in pairs
            )
            columns.append(np.asarray(column, dtype=float))
        return np.stack(columns, axis=-1)

    def combined_bases(
        self, *, spec: MBSpec, radii_squared: Mapping[int, float]
    ) -> Tuple[float, ...]:
        log_t: Dict[int, np.ndarray] = {
            variable: np.array(np.log(value))
            for variable, value in radii_squared.items()
        }
        return tuple(
            float(x) for x in np.exp(self.log_bases(spec=spec, log_t=log_t))
        )

    def _check_contour(self, *, rows: np.ndarray) -> float:
        if rows.size == 0 or np.linalg.matrix_rank(rows) < rows.shape[1]:
            raise ContourPoleError(
                "The Gamma rows leave a contour direction without decay."
            )
        singular_values: np.ndarray = np.linalg.svd(rows, compute_uv=False)
        return pi / 2 * float(singular_values.min())

    def _boundary_nodes(self, *, dim: int, height: float) -> np.ndarray:
        axis: np.ndarray = np.linspace(
            -height, height, max(3, int(4 * height) + 1)
        )
        faces: List[np.ndarray] = []
        for fixed in range(dim):
            for sign in (-1.0, 1.0):
                free = np.meshgrid(*([axis] * (dim - 1)), indexing="ij")
                columns = [grid.ravel() for grid in free]
                size: int = columns[0].size if columns else 1
                columns.insert(fixed, np.full(size, sign * height))
                faces.append(np.stack(columns, axis=1))
        return np.concatenate(faces, axis=0)

    def certified_height(self, *, spec: MBSpec) -> Tuple[float, float]:
        rows: np.ndarray = self.rows(spec=spec)
        rate: float = self._check_contour(rows=rows)
        tolerance: float = settings.RESIDUE_MB_TOLERANCE
        height: float = settings.RESIDUE_MB_INITIAL_HEIGHT

        while height <= settings.RESIDUE_MB_MAX_HEIGHT:
            boundary = self._boundary_nodes(dim=spec.dim, height=height)
            modulus: float = float(
                np.exp(
                    GammaService()
                    .log_product(rows=rows, nodes=boundary)
                    .real.max()
                )
            )
            surface: float = 2 * spec.dim * (2 * height) ** (spec.dim - 1)
            tail: float = modulus * surface / rate / (2 * pi) ** spec.dim
            if tail <= 0.1 * tolerance:
                return height, tail
            height *= 1.5

        raise MellinBarnesNonconvergentError(
            f"The contour tail does not fall below {tolerance} before the "
            f"maximum height {settings.RESIDUE_MB_MAX_HEIGHT}."
        )

    def _nodes(self, *, dim: int, step: float, height: float) -> np.ndarray:
        count: int = ceil(height / step)
        axis: np.ndarray = np.arange(-count, count + 1) * step
        grids = np.meshgrid(*([axis] * dim), indexing="ij")
        return np.stack([grid.ravel() for grid in grids], axis=1)

    def _trapezoid(
        self,
        *,
        rows: np.ndarray,
        log_bases: np.ndarray,
        step: float,
        height: float,
    ) -> Tuple[np.ndarray, int]:
        dim: int = rows.shape[1]
        nodes: np.ndarray = self._nodes(dim=dim, step=step, height=height)
        weights: np.ndarray = np.exp(
            GammaService().log_product(rows=rows, nodes=nodes)
        ) * (step / (2 * pi)) ** dim

        values: np.ndarray = np.empty(log_bases.shape[0], dtype=complex)
        chunk: int = max(1, CHUNK_ELEMENTS // nodes.shape[0])
        for start in range(0, log_bases.shape[0], chunk):
            phases: np.ndarray = nodes @ log_bases[start : start + chunk].T
            values[start : start + chunk] = weights @ np.exp(1j * phases)

        return values, nodes.shape[0]

    def evaluate_many(
        self, *, spec: MBSpec, log_bases: np.ndarray
    ) -> MBBatch:
        if spec.dim == 0:
            shape: Tuple[int, ...] = np.shape(log_bases)
            return MBBatch(
                values=np.ones(shape[0] if len(shape) > 1 else 1),
                abs_error_estimate=0.0,
                truncation_height=0.0,
                nodes=0,
                step=0.0,
            )

        points: np.ndarray = np.asarray(log_bases, dtype=float).reshape(
            -1, spec.dim
        )
        rows: np.ndarray = self.rows(spec=spec)
        height, tail = self.certified_height(spec=spec)
        tolerance: float = settings.RESIDUE_MB_TOLERANCE
        step: float = settings.RESIDUE_MB_INITIAL_STEP

        previous, _ = self._trapezoid(
            rows=rows, log_bases=points, step=step, height=height
        )
        while True:
            step /= 2
            if step < settings.RESIDUE_MB_MIN_STEP:
                raise MellinBarnesNonconvergentError(
                    "Step refinement stalled above the tolerance "
                    f"{tolerance} for {points.shape[0]} bases."
                )
            current, nodes = self._trapezoid(
                rows=rows, log_bases=points, step=step, height=height
            )
            change: float = float(np.max(np.abs(current - previous)))
            if change <= tolerance:
                break
            previous = current

        scale: np.ndarray = np.maximum(1.0, np.abs(current.real))
        if np.any(np.abs(current.imag) > SYMMETRY_TOLERANCE * scale):
            raise MellinBarnesNonconvergentError(
                "The contour sum lost conjugate symmetry: imaginary part "
                f"{float(np.max(np.abs(current.imag)))}."
            )

        logger.debug(
            "F on %d bases: height %.2f, step %.4f, %d nodes",
            points.shape[0],
            height,
            step,
            nodes,
        )
        return MBBatch(
            values=current.real.copy(),
            abs_error_estimate=change + tail,
            truncation_height=height,
            nodes=nodes,
            step=step,
        )

    def eval_f(self, *, spec: MBSpec, bases: Sequence[float]) -> MBValue:
        if len(bases) != spec.dim:
            raise ValueError(
                f"Expected {spec.dim} bases, got {len(bases)}."
            )
        if any(base <= 0 for base in bases):
            raise ValueError("Every base must be positive.")

        batch: MBBatch = self.evaluate_many(
            spec=spec, log_bases=np.log(np.array(bases, dtype=float))
        )
        return MBValue(
            value=float(batch.values[0]),
            abs_error_estimate=batch.abs_error_estimate,
            truncation_height=batch.truncation_height,
            nodes=batch.nodes,
            step=batch.step,
        )

    def residue_series(
        self, *, spec: MBSpec, base: float, terms: int = 80
    ) -> float:
        """Right half-plane residue sum of a one-dimensional F."""
        if spec.dim != 1:
            raise ValueError("Residue series are implemented for dim 1.")

        coefficients: List[Fraction] = [row[0] for row in spec.gamma_rows]
        poles: List[Tuple[Fraction, int, int]] = [
            (Fraction(m) / c, row, m)
            for row, c in enumerate(coefficients)
            if c > 0
            for m in range(1, terms + 1)
        ]
        locations = [location for location, _, _ in poles]
        if len(set(locations)) != len(locations):
            raise NonSimplePoleError("Two Gamma factors share a pole.")

        total: float = 0.0
        for location, row, m in poles:
            rest: float = 1.0
            for other, c in enumerate(coefficients):
                if other == row:
                    continue
                argument: Fraction = 1 - c * location
                if argument <= 0 and argument.denominator == 1:
                    raise NonSimplePoleError(
                        f"Gamma row {other + 1} is singular at {location}."
                    )
                rest *= float(gamma(float(argument)))
            residue: float = (
                (-1) ** (m - 1) / float(coefficients[row]) / factorial(m - 1)
            )
            total += residue * rest * base ** float(location)

        return total

    def shifted_classical_pair(
        self, *, t: float, step: float = 0.05, height: float = 20.0
    ) -> float:
        """(1/2 pi i) integral over 1/2 + iR of Gamma(l)Gamma(1-l) t^-l."""
        count: int = ceil(height / step)
        y: np.ndarray = np.arange(-count, count + 1) * step
        lam: np.ndarray = 0.5 + 1j * y
        log_integrand: np.ndarray = (
            loggamma(lam) + loggamma(1 - lam) - lam * np.log(t)
        )
        return float(np.sum(np.exp(log_integrand)).real * step / (2 * pi))

    def selfcheck(self) -> SelfcheckReport:
        points: List[SelfcheckPoint] = [
            SelfcheckPoint(
                pair="Gamma(l)Gamma(1-l) t^-l on Re l = 1/2",
                t=t,
                expected=1 / (1 + t),
                computed=self.shifted_classical_pair(t=t),
            )
            for t in (0.1, 1.0, 10.0)
        ]
        points += [
            SelfcheckPoint(
                pair="Gamma(1-l)Gamma(1+l) t^l on Re l = 0",
                t=t,
                expected=t / (1 + t) ** 2,
                computed=self.eval_f(spec=STANDARD_PAIR, bases=[t]).value,
            )
            for t in (0.1, 0.25, 0.5, 1.0)
        ]

        report = SelfcheckReport(
            points=tuple(points),
            gamma_checks=tuple(GammaService().test_vector()),
            tolerance=SELFCHECK_TOLERANCE,
            gamma_tolerance=GAMMA_TOLERANCE,
        )
        if not report.passed:
            logger.warning(
                "Mellin-Barnes selfcheck failed: deviation %.3e, gamma %.3e",
                report.max_deviation,
                report.gamma_max_relative_error,
            )
        return report
