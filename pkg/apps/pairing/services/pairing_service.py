import logging
from cmath import pi
from typing import List, Mapping, Optional, Sequence, Tuple

from apps.linalg.dataclasses import ExponentMatrix
from apps.pairing.choices import Convention, VariableRole
from apps.pairing.dataclasses import (
    AngularVerdict,
    PairingResult,
    RadialDensity,
    RadialIntegral,
    SeparableCoefficient,
    TermContribution,
    TestForm,
)
from apps.pairing.exceptions import InvalidTestFormError
from apps.pairing.services.radial_quadrature_service import (
    RadialQuadratureService,
)
from apps.structure.dataclasses import CurrentTerm
from apps.structure.services import StructureService

logger = logging.getLogger(__name__)

TWO_PI_I: complex = 2j * pi


class PairingService:

    def phi_alpha(
        self,
        *,
        coefficient: SeparableCoefficient,
        J: Sequence[int],
        powers: Mapping[int, int],
    ) -> Optional[SeparableCoefficient]:
        """Origin derivatives in the J-variables, or None when they vanish.

        (1/(k-1)!) d^(k-1)/dzeta^(k-1) of g(|zeta|^2) zeta^a conj(zeta)^b
        at 0 is g(0) when a = k - 1 and b = 0, and 0 otherwise.
        """
        weight: complex = coefficient.weight
        for j in J:
            factor = coefficient.factor(j)
            if factor.antiholomorphic != 0:
                return None
            if factor.holomorphic != powers[j] - 1:
                return None
            weight *= factor.profile.value_at_zero
        if weight == 0:
            return None

        return SeparableCoefficient(
            factors=tuple(
                f for f in coefficient.factors if f.variable not in J
            ),
            weight=weight,
        )

    def dbar_verdicts(
        self,
        *,
        term: CurrentTerm,
        coefficient: SeparableCoefficient,
        position: int = 0,
    ) -> Tuple[AngularVerdict, ...]:
        verdicts: List[AngularVerdict] = []
        for j, power in term.dbar_factors:
            factor = coefficient.factor(j)
            mismatch: int = factor.holomorphic - (power - 1)
            verdicts.append(
                AngularVerdict(
                    coefficient=position,
                    variable=j,
                    role=VariableRole.DBAR,
                    keep=mismatch == 0 and factor.antiholomorphic == 0,
                    angular_exponent=mismatch - factor.antiholomorphic,
                    radial_exponent=0,
                )
            )
        return tuple(verdicts)

    def angular_rule(
        self,
        *,
        term: CurrentTerm,
        coefficient: SeparableCoefficient,
        position: int = 0,
    ) -> Tuple[AngularVerdict, ...]:
        """Net angular frequency of every variable outside J.

        The density of a kept variable is t^radial_exponent dt.
        """
        verdicts: List[AngularVerdict] = []
        for k, power, conj_power in term.conj_pv_factors:
            factor = coefficient.factor(k)
            frequency: int = (factor.holomorphic - power) - (
                factor.antiholomorphic - conj_power
            )
            verdicts.append(
                AngularVerdict(
                    coefficient=position,
                    variable=k,
                    role=VariableRole.CONJ_PV,
                    keep=frequency == 0,
                    angular_exponent=frequency,
                    radial_exponent=factor.antiholomorphic - conj_power,
                )
            )
        for variable, power in term.pv_factors:
            factor = coefficient.factor(variable)
            frequency = factor.holomorphic - power - factor.antiholomorphic
            verdicts.append(
                AngularVerdict(
                    coefficient=position,
                    variable=variable,
                    role=VariableRole.PV,
                    keep=frequency == 0,
                    angular_exponent=frequency,
                    radial_exponent=factor.antiholomorphic,
                )
            )
        return tuple(sorted(verdicts, key=lambda verdict: verdict.variable))

    def densities(
        self,
        *,
        term: CurrentTerm,
        survivor: SeparableCoefficient,
        verdicts: Sequence[AngularVerdict],
    ) -> Tuple[RadialDensity, ...]:
        quadrature = RadialQuadratureService()
        return tuple(
            RadialDensity(
                variable=verdict.variable,
                exponent=verdict.radial_exponent,
                profile=survivor.factor(verdict.variable).profile,
                decay=quadrature.decay(
                    variable=verdict.variable,
                    exponent=verdict.radial_exponent,
                    spec=term.mb,
                ),
            )
            for verdict in verdicts
        )

    def pair(
        self, *, term: CurrentTerm, form: TestForm
    ) -> PairingResult:
        p: int = len(term.index)
        prefactor: complex = (
            term.sign * term.delta_sign * TWO_PI_I ** (form.n - p)
        )
        powers = term.powers
        value: complex = 0j
        error: float = 0.0
        nodes: int = 0
        trace: List[AngularVerdict] = []

        for position, coefficient in enumerate(
            form.coefficients(term.index)
        ):
            verdicts = self.angular_rule(
                term=term, coefficient=coefficient, position=position
            )
            trace += self.dbar_verdicts(
                term=term, coefficient=coefficient, position=position
            )
            trace += verdicts

            survivor = self.phi_alpha(
                coefficient=coefficient, J=term.J, powers=powers
            )
            if survivor is None or not all(v.keep for v in verdicts):
                continue

            integral: RadialIntegral = RadialQuadratureService().integrate(
                densities=self.densities(
                    term=term, survivor=survivor, verdicts=verdicts
                ),
                spec=term.mb,
            )
            scale: complex = prefactor * survivor.weight
            value += scale * integral.value
            error += abs(scale) * integral.abs_error_estimate
            nodes += integral.nodes

        contribution = TermContribution(
            index=term.index,
            q=term.q,
            value=value,
            abs_error_estimate=error,
            selection_trace=tuple(trace),
            quadrature_nodes=nodes,
        )
        return PairingResult(
            value=value,
            abs_error_estimate=error,
            selection_trace=tuple(trace),
            contributions=(contribution,),
            quadrature_nodes=nodes,
        )

    def check_form(self, *, matrix: ExponentMatrix, form: TestForm) -> None:
        if form.n != matrix.n:
            raise InvalidTestFormError(
                f"The test form lives in n={form.n} variables, the matrix "
                f"in n={matrix.n}."
            )
        for index in form.components:
            if len(index) != matrix.p or list(index) != sorted(set(index)):
                raise InvalidTestFormError(
                    f"Component {index} is not an increasing "
                    f"{matrix.p}-subset."
                )
            if index[0] < 1 or index[-1] > matrix.n:
                raise InvalidTestFormError(
                    f"Component {index} leaves 1..{matrix.n}."
                )

    def evaluate_current(
        self, *, matrix: ExponentMatrix, form: TestForm
    ) -> PairingResult:
        self.check_form(matrix=matrix, form=form)
        decomposition = StructureService().decompose(matrix=matrix)
        results: List[PairingResult] = [
            self.pair(term=term, form=form) for term in decomposition.terms
        ]

        value: complex = sum((result.value for result in results), 0j)
        logger.info(
            "Paired %d terms of a %dx%d matrix: %s",
            len(results),
            matrix.p,
            matrix.n,
            value,
        )
        return PairingResult(
            value=value,
            abs_error_estimate=sum(r.abs_error_estimate for r in results),
            selection_trace=tuple(
                verdict for r in results for verdict in r.selection_trace
            ),
            contributions=tuple(
                contribution
                for result in results
                for contribution in result.contributions
            ),
            quadrature_nodes=sum(r.quadrature_nodes for r in results),
        )

    def conversion_factor(
        self, *, q: int, source: Convention, target: Convention
    ) -> complex:
        """One 2 pi i per dbar factor separates the two conventions."""
        exponent: int = {
            Convention.BOCHNER_MARTINELLI: 0,
            Convention.DOLBEAULT: q,
        }[target] - {
            Convention.BOCHNER_MARTINELLI: 0,
            Convention.DOLBEAULT: q,
        }[source]
        return TWO_PI_I**exponent

    def to_convention(
        self, *, result: PairingResult, convention: Convention
    ) -> PairingResult:
        contributions: List[TermContribution] = []
        for contribution in result.contributions:
            factor: complex = self.conversion_factor(
                q=contribution.q, source=result.convention, target=convention
            )
            contributions.append(
                TermContribution(
                    index=contribution.index,
                    q=contribution.q,
                    value=contribution.value * factor,
                    abs_error_estimate=contribution.abs_error_estimate
                    * abs(factor),
                    selection_trace=contribution.selection_trace,
                    quadrature_nodes=contribution.quadrature_nodes,
                )
            )
        return PairingResult(
            value=sum((c.value for c in contributions), 0j),
            abs_error_estimate=sum(
                c.abs_error_estimate for c in contributions
            ),
            selection_trace=result.selection_trace,
            convention=convention,
            contributions=tuple(contributions),
            quadrature_nodes=result.quadrature_nodes,
        )
