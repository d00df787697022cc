import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple

from apps.cones.dataclasses import FeasibilityResult, LinearInequality
from apps.cones.exceptions import InconsistentSystemError

logger = logging.getLogger(__name__)


class FourierMotzkinService:
    """Exact feasibility of mixed strict and non-strict linear systems."""

    def strict_feasible(
        self,
        *,
        constraints: Sequence[LinearInequality],
        strict_index: Optional[int] = None,
        dimension: Optional[int] = None,
    ) -> FeasibilityResult:
        size: int = self._dimension(
            constraints=constraints, dimension=dimension
        )
        system: List[LinearInequality] = [
            constraint.as_strict() if position == strict_index else constraint
            for position, constraint in enumerate(constraints)
        ]

        stages: List[List[LinearInequality]] = []
        current: List[LinearInequality] = system
        for variable in reversed(range(size)):
            stages.append(current)
            current = self._eliminate(constraints=current, variable=variable)

        if not all(constraint.holds_trivially() for constraint in current):
            return FeasibilityResult(feasible=False, witness=None)

        point: List[Fraction] = [Fraction(0)] * size
        for variable in range(size):
            point[variable] = self._choose_value(
                constraints=stages[size - 1 - variable],
                variable=variable,
                point=point,
            )

        if not all(constraint.is_satisfied_by(point) for constraint in system):
            raise InconsistentSystemError(
                f"Back substitution produced {point}, which violates the "
                "system."
            )

        witness: Tuple[Fraction, ...] = tuple(point)
        if all(constraint.constant == 0 for constraint in system):
            witness = self._primitive(point=witness)

        logger.debug(
            "Feasible system of %d constraints, witness %s",
            len(system),
            witness,
        )
        return FeasibilityResult(feasible=True, witness=witness)

    def _dimension(
        self,
        *,
        constraints: Sequence[LinearInequality],
        dimension: Optional[int],
    ) -> int:
        sizes = {constraint.dimension for constraint in constraints}
        if dimension is not None:
            sizes.add(dimension)
        if len(sizes) > 1:
            raise InconsistentSystemError(
                f"Constraints disagree on the dimension: {sorted(sizes)}."
            )
        return sizes.pop() if sizes else 0

    def _eliminate(
        self, *, constraints: Sequence[LinearInequality], variable: int
    ) -> List[LinearInequality]:
        lower: List[LinearInequality] = []
        upper: List[LinearInequality] = []
        kept: Dict[Tuple[Tuple[Fraction, ...], Fraction], bool] = {}

        for constraint in constraints:
            coefficient: Fraction = constraint.coefficients[variable]
            if coefficient > 0:
                lower.append(constraint)
            elif coefficient < 0:
                upper.append(constraint)
            else:
                self._keep(kept=kept, constraint=constraint)

        for positive in lower:
            for negative in upper:
                a: Fraction = positive.coefficients[variable]
                b: Fraction = -negative.coefficients[variable]
                combined = LinearInequality(
                    coefficients=tuple(
                        b * p + a * q
                        for p, q in zip(
                            positive.coefficients, negative.coefficients
                        )
                    ),
                    constant=b * positive.constant + a * negative.constant,
                    strict=positive.strict or negative.strict,
                )
                self._keep(kept=kept, constraint=combined)

        return [
            LinearInequality(
                coefficients=coefficients, constant=constant, strict=strict
            )
            for (coefficients, constant), strict in kept.items()
        ]

    def _keep(
        self,
        *,
        kept: Dict[Tuple[Tuple[Fraction, ...], Fraction], bool],
        constraint: LinearInequality,
    ) -> None:
        scale: Fraction = max(
            (abs(c) for c in constraint.coefficients), default=Fraction(0)
        )
        if scale == 0:
            scale = Fraction(1)
        key = (
            tuple(c / scale for c in constraint.coefficients),
            constraint.constant / scale,
        )
        kept[key] = kept.get(key, False) or constraint.strict

    def _choose_value(
        self,
        *,
        constraints: Sequence[LinearInequality],
        variable: int,
        point: Sequence[Fraction],
    ) -> Fraction:
        lower: Optional[Fraction] = None
        lower_strict: bool = False
        upper: Optional[Fraction] = None
        upper_strict: bool = False

        for constraint in constraints:
            coefficient: Fraction = constraint.coefficients[variable]
            if coefficient == 0:
                continue
            residual: Fraction = constraint.constant - sum(
                (
                    constraint.coefficients[u] * point[u]
                    for u in range(variable)
                ),
                Fraction(0),
            )
            bound: Fraction = residual / coefficient

            if coefficient > 0:
                if lower is None or bound > lower:
                    lower, lower_strict = bound, constraint.strict
                elif bound == lower:
                    lower_strict = lower_strict or constraint.strict
            else:
                if upper is None or bound < upper:
                    upper, upper_strict = bound, constraint.strict
                elif bound == upper:
                    upper_strict = upper_strict or constraint.strict

        if lower is not None and upper is not None:
            if lower < upper:
                return (lower + upper) / 2
            return lower
        if lower is not None:
            return lower + 1 if lower_strict else lower
        if upper is not None:
            return upper - 1 if upper_strict else upper
        return Fraction(0)

    def _primitive(
        self, *, point: Tuple[Fraction, ...]
    ) -> Tuple[Fraction, ...]:
        if not any(point):
            return point
        denominator: int = lcm(*(value.denominator for value in point))
        integers: List[int] = [int(value * denominator) for value in point]
        divisor: int = gcd(*integers)
        return tuple(Fraction(value, divisor) for value in integers)
