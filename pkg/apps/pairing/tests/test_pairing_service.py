from cmath import pi
from typing import Dict, Optional, Tuple
from unittest import mock

import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import quad

from apps.linalg.dataclasses import ExponentMatrix
from apps.pairing.choices import Convention, ProfileFamily, VariableRole
from apps.pairing.dataclasses import (
    PairingResult,
    RadialProfile,
    SeparableCoefficient,
    TestForm,
    VariableFactor,
)
from apps.pairing.exceptions import (
    InvalidProfileError,
    InvalidTestFormError,
)
from apps.pairing.services import (
    PairingService,
    ProfileService,
    RadialQuadratureService,
)
from apps.structure.dataclasses import CurrentTerm
from apps.structure.services import StructureService

BUMP: RadialProfile = RadialProfile(family=ProfileFamily.BUMP)
ANNULUS: RadialProfile = RadialProfile(
    family=ProfileFamily.ANNULUS, inner_radius=0.5
)
FLAGSHIP: ExponentMatrix = ExponentMatrix(
    p=2, n=3, entries=((1, 1, 0), (0, 1, 1))
)
IDENTITY: ExponentMatrix = ExponentMatrix(p=2, n=2, entries=((1, 0), (0, 1)))


def coefficient(
    degrees: Dict[int, Tuple[int, int]],
    profiles: Optional[Dict[int, RadialProfile]] = None,
    weight: complex = 1.0,
) -> SeparableCoefficient:
    profiles = profiles or {}
    return SeparableCoefficient(
        factors=tuple(
            VariableFactor(
                variable=variable,
                holomorphic=a,
                antiholomorphic=b,
                profile=profiles.get(variable, BUMP),
            )
            for variable, (a, b) in sorted(degrees.items())
        ),
        weight=weight,
    )


def single(
    n: int, index: Tuple[int, ...], degrees: Dict[int, Tuple[int, int]]
) -> TestForm:
    return TestForm(n=n, components={index: (coefficient(degrees),)})


def bump(t: float) -> float:
    return float(np.exp(-t / (1 - t))) if t < 1 else 0.0


def flagship_inner(t3: float, exponent: int) -> float:
    """integral over t1 of bump(t1) t1^exponent F(t1/t3), F(x) = x/(1+x)^2."""
    if exponent == 1:
        return quad(
            lambda t1: bump(t1) * t1 * t3 / (t1 + t3) ** 2, 0, 1, limit=200
        )[0]
    smooth: float = quad(
        lambda t1: (bump(t1) - 1) * t3 / (t1 + t3) ** 2, 0, 1, limit=200
    )[0]
    return smooth + 1 / (1 + t3)


class ProfileServiceTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = ProfileService()

    def test_values(self) -> None:
        plateau = RadialProfile(
            family=ProfileFamily.PLATEAU, inner_radius=0.5
        )
        t = np.array([0.0, 0.2, 0.5, 1.0, 3.0])

        np.testing.assert_allclose(
            self.service.value(profile=BUMP, t=t),
            [1.0, np.exp(-0.25), np.exp(-1.0), 0.0, 0.0],
        )
        np.testing.assert_allclose(
            self.service.value(profile=plateau, t=t)[[0, 1, 3, 4]],
            [1.0, 1.0, 0.0, 0.0],
        )
        self.assertEqual(self.service.value(profile=ANNULUS, t=0.1), 0.0)
        self.assertAlmostEqual(
            float(self.service.value(profile=ANNULUS, t=0.625)), 1.0
        )

    def test_bump_taylor_coefficients(self) -> None:
        profile = RadialProfile(family=ProfileFamily.BUMP, support_radius=2)

        self.assertEqual(profile.taylor, (1.0, -0.25, -1 / 32, -1 / 384))

    def test_inner_radius_must_lie_inside(self) -> None:
        with self.assertRaises(InvalidProfileError):
            RadialProfile(family=ProfileFamily.PLATEAU, inner_radius=1.0)
        with self.assertRaises(InvalidProfileError):
            RadialProfile(family=ProfileFamily.BUMP, support_radius=0)

    def test_mellin_transform_matches_direct_quadrature(self) -> None:
        for sigma in (1.0, 2.0, 3.5):
            with self.subTest(sigma=sigma):
                expected, _ = quad(
                    lambda t: t ** (sigma - 1) * bump(t), 0, 1, limit=200
                )
                computed = self.service.mellin_transform(
                    profile=BUMP, sigma=sigma
                )
                self.assertAlmostEqual(complex(computed).real, expected, 8)

    def test_continuation_past_the_pole(self) -> None:
        sigma: float = -0.5
        excess, _ = quad(
            lambda t: t ** (sigma - 1) * (bump(t) - 1), 0, 1, limit=200
        )

        computed = self.service.mellin_transform(profile=BUMP, sigma=sigma)

        self.assertAlmostEqual(
            complex(computed).real, excess + 1 / sigma, 6
        )

    def test_pole_and_half_plane_are_rejected(self) -> None:
        with self.assertRaises(InvalidProfileError):
            self.service.mellin_transform(profile=BUMP, sigma=0)
        with self.assertRaises(InvalidProfileError):
            self.service.mellin_transform(profile=BUMP, sigma=-1.5)

    def test_annulus_transform_is_entire(self) -> None:
        computed = self.service.mellin_transform(
            profile=ANNULUS, sigma=-3.0
        )
        expected, _ = quad(
            lambda t: t**-4.0
            * float(self.service.value(profile=ANNULUS, t=t)),
            0.25,
            1,
        )

        self.assertAlmostEqual(complex(computed).real, expected, 7)


class PhiAlphaTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = PairingService()

    def test_single_derivative_survives(self) -> None:
        survivor = self.service.phi_alpha(
            coefficient=coefficient({1: (0, 0), 2: (1, 0)}),
            J=(2,),
            powers={2: 2},
        )

        assert survivor is not None
        self.assertEqual(survivor.variables, (1,))
        self.assertEqual(survivor.weight, 1.0)

    def test_antiholomorphic_degree_kills(self) -> None:
        survivor = self.service.phi_alpha(
            coefficient=coefficient({1: (0, 0), 2: (1, 1)}),
            J=(2,),
            powers={2: 2},
        )

        self.assertIsNone(survivor)

    def test_degree_mismatch_kills(self) -> None:
        survivor = self.service.phi_alpha(
            coefficient=coefficient({1: (0, 0), 2: (3, 0)}),
            J=(2,),
            powers={2: 2},
        )

        self.assertIsNone(survivor)

    def test_profile_vanishing_at_origin_kills(self) -> None:
        survivor = self.service.phi_alpha(
            coefficient=coefficient({1: (0, 0)}, profiles={1: ANNULUS}),
            J=(1,),
            powers={1: 1},
        )

        self.assertIsNone(survivor)


class AngularRuleTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = PairingService()
        self.terms = StructureService().decompose(matrix=FLAGSHIP).terms

    def test_principal_value_variable(self) -> None:
        term: CurrentTerm = self.terms[1]

        (verdict,) = self.service.angular_rule(
            term=term,
            coefficient=coefficient({1: (0, 0), 2: (2, 0), 3: (0, 0)}),
        )
        (killed,) = self.service.angular_rule(
            term=term,
            coefficient=coefficient({1: (0, 0), 2: (1, 0), 3: (0, 0)}),
        )

        self.assertEqual(verdict.role, VariableRole.PV)
        self.assertTrue(verdict.keep)
        self.assertEqual(verdict.radial_exponent, 0)
        self.assertFalse(killed.keep)
        self.assertEqual(killed.angular_exponent, -1)

    def test_conjugate_principal_value_variable(self) -> None:
        term: CurrentTerm = self.terms[0]

        verdicts = self.service.angular_rule(
            term=term,
            coefficient=coefficient({1: (1, 1), 2: (1, 0), 3: (1, 0)}),
        )

        self.assertEqual([v.variable for v in verdicts], [1, 3])
        self.assertEqual(verdicts[0].role, VariableRole.CONJ_PV)
        self.assertTrue(all(v.keep for v in verdicts))
        self.assertEqual([v.radial_exponent for v in verdicts], [0, 0])


class PairTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = PairingService()
        self.flagship_term: CurrentTerm = (
            StructureService().decompose(matrix=FLAGSHIP).terms[0]
        )

    def test_one_variable_dolbeault_case(self) -> None:
        for k in (1, 2, 3):
            matrix = ExponentMatrix(p=1, n=1, entries=((k,),))
            form = single(1, (1,), {1: (k - 1, 0)})
            with self.subTest(k=k):
                result = self.service.evaluate_current(
                    matrix=matrix, form=form
                )
                self.assertAlmostEqual(result.value, 1.0)
                self.assertEqual(
                    result.convention, Convention.BOCHNER_MARTINELLI
                )

    def test_identity_pairs_to_profile_values(self) -> None:
        form = single(2, (1, 2), {1: (0, 0), 2: (0, 0)})

        result: PairingResult = self.service.evaluate_current(
            matrix=IDENTITY, form=form
        )

        self.assertAlmostEqual(result.value, 1.0)
        self.assertEqual(len(result.contributions), 1)

    def test_principal_value_direction_integrates_the_profile(self) -> None:
        matrix = ExponentMatrix(p=1, n=2, entries=((1, 0),))
        for b in (0, 1, 2):
            expected, _ = quad(lambda t: t**b * bump(t), 0, 1, limit=200)
            form = single(2, (1,), {1: (0, 0), 2: (b, b)})
            with self.subTest(b=b):
                result = self.service.evaluate_current(
                    matrix=matrix, form=form
                )
                self.assertAlmostEqual(result.value.real, 0.0)
                self.assertAlmostEqual(
                    result.value.imag, -2 * pi * expected, 8
                )

    def test_flagship_term_against_direct_quadrature(self) -> None:
        form = single(3, (1, 2), {1: (1, 1), 2: (1, 0), 3: (1, 0)})
        expected, _ = quad(
            lambda t3: bump(t3) * flagship_inner(t3, 1), 0, 1, limit=200
        )

        result = self.service.pair(term=self.flagship_term, form=form)

        self.assertAlmostEqual(result.value.real, 0.0)
        self.assertAlmostEqual(result.value.imag, -2 * pi * expected, 6)
        self.assertGreater(result.quadrature_nodes, 0)

    def test_conjugate_principal_value_at_the_decay_edge(self) -> None:
        form = single(3, (1, 2), {1: (0, 0), 2: (1, 0), 3: (1, 0)})
        expected, _ = quad(
            lambda t3: bump(t3) * flagship_inner(t3, 0), 0, 1, limit=200
        )

        result = self.service.pair(term=self.flagship_term, form=form)

        self.assertAlmostEqual(result.value.imag, -2 * pi * expected, 5)

    def test_linearity(self) -> None:
        matrix = ExponentMatrix(p=1, n=2, entries=((1, 0),))
        first = coefficient({1: (0, 0), 2: (0, 0)})
        second = coefficient({1: (0, 0), 2: (1, 1)})
        combined = TestForm(
            n=2,
            components={
                (1,): (
                    coefficient({1: (0, 0), 2: (0, 0)}, weight=2.0),
                    coefficient({1: (0, 0), 2: (1, 1)}, weight=-3j),
                )
            },
        )

        values = [
            self.service.evaluate_current(matrix=matrix, form=form).value
            for form in (
                combined,
                TestForm(n=2, components={(1,): (first,)}),
                TestForm(n=2, components={(1,): (second,)}),
            )
        ]

        value, one, two = values
        self.assertLess(abs(value - (2 * one - 3j * two)), 1e-8 * abs(value))

    def test_support_away_from_the_origin_gives_exact_zero(self) -> None:
        form = TestForm(
            n=2,
            components={
                (1, 2): (
                    coefficient(
                        {1: (0, 0), 2: (0, 0)}, profiles={2: ANNULUS}
                    ),
                )
            },
        )

        result = self.service.evaluate_current(matrix=IDENTITY, form=form)

        self.assertEqual(result.value, 0)
        self.assertEqual(result.abs_error_estimate, 0)

    def test_violated_rules_skip_quadrature(self) -> None:
        form = TestForm(
            n=3,
            components={
                (1, 2): (coefficient({1: (0, 0), 2: (0, 0), 3: (0, 0)}),),
                (1, 3): (coefficient({1: (0, 0), 2: (1, 0), 3: (0, 0)}),),
                (2, 3): (coefficient({1: (2, 0), 2: (1, 0), 3: (0, 0)}),),
            },
        )

        with mock.patch.object(
            RadialQuadratureService, "integrate"
        ) as integrate:
            result = self.service.evaluate_current(
                matrix=FLAGSHIP, form=form
            )

        integrate.assert_not_called()
        self.assertEqual(result.value, 0)
        self.assertFalse(all(v.keep for v in result.selection_trace))

    def test_empty_term_list_pairs_to_zero(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 3), (0, 1)))
        form = single(2, (1, 2), {1: (0, 0), 2: (0, 0)})

        result = self.service.evaluate_current(matrix=matrix, form=form)

        self.assertEqual(result.value, 0)
        self.assertEqual(result.contributions, ())

    def test_dolbeault_convention(self) -> None:
        form = single(2, (1, 2), {1: (0, 0), 2: (0, 0)})
        result = self.service.evaluate_current(matrix=IDENTITY, form=form)

        converted = self.service.to_convention(
            result=result, convention=Convention.DOLBEAULT
        )
        back = self.service.to_convention(
            result=converted, convention=Convention.BOCHNER_MARTINELLI
        )

        self.assertAlmostEqual(converted.value, -4 * pi**2)
        self.assertAlmostEqual(back.value, result.value)

    def test_mismatched_forms_are_rejected(self) -> None:
        with self.assertRaises(InvalidTestFormError):
            self.service.evaluate_current(
                matrix=IDENTITY,
                form=single(2, (2, 1), {1: (0, 0), 2: (0, 0)}),
            )
        with self.assertRaises(InvalidTestFormError):
            single(2, (1, 2), {1: (0, 0)})


class RadialQuadratureServiceTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = RadialQuadratureService()
        self.spec = StructureService().decompose(matrix=FLAGSHIP).terms[0].mb

    def test_decay_of_a_conjugate_variable_comes_from_f(self) -> None:
        self.assertEqual(
            self.service.decay(variable=1, exponent=-1, spec=self.spec), 1.0
        )
        self.assertEqual(
            self.service.decay(variable=3, exponent=2, spec=self.spec), 3.0
        )

    def test_coupled_variables(self) -> None:
        self.assertEqual(
            self.service.coupled_variables(spec=self.spec), (1, 3)
        )

    def test_every_coupled_variable_needs_a_density(self) -> None:
        with self.assertRaises(ValueError):
            self.service.integrate(densities=(), spec=self.spec)
