import random
from fractions import Fraction
from itertools import product
from typing import List, Set, Tuple

from django.test import SimpleTestCase

from apps.cones.choices import Vanishing
from apps.cones.dataclasses import ConeReport, LinearInequality
from apps.cones.exceptions import StructuralAssumptionError
from apps.cones.services import ConeService, FourierMotzkinService
from apps.linalg.dataclasses import ExponentMatrix
from apps.linalg.services import ExactLinalgService


def report_for(matrix: ExponentMatrix, index: Tuple[int, ...]) -> ConeReport:
    data = ExactLinalgService().index_data(matrix=matrix, index=index)
    return ConeService().cone_report(matrix=matrix, data=data)


def random_entries(
    generator: random.Random, p: int, n: int
) -> Tuple[Tuple[int, ...], ...]:
    rows: List[Tuple[int, ...]] = []
    while len(rows) < p:
        row = tuple(generator.randint(0, 3) for _ in range(n))
        if any(row):
            rows.append(row)
    return tuple(rows)


class FourierMotzkinServiceTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = FourierMotzkinService()

    def test_flagship_implicit_row_is_not_strictly_feasible(self) -> None:
        constraints: List[LinearInequality] = [
            LinearInequality.of([1, 0]),
            LinearInequality.of([1, 1]),
            LinearInequality.of([-1, -1]),
        ]

        strict_first = self.service.strict_feasible(
            constraints=constraints, strict_index=0
        )
        strict_second = self.service.strict_feasible(
            constraints=constraints, strict_index=1
        )

        self.assertTrue(strict_first.feasible)
        self.assertEqual(strict_first.witness, (1, -1))
        self.assertFalse(strict_second.feasible)
        self.assertIsNone(strict_second.witness)

    def test_half_space_witness(self) -> None:
        constraints: List[LinearInequality] = [
            LinearInequality.of([1, 0]),
            LinearInequality.of([3, 1]),
            LinearInequality.of([-1, -1]),
        ]

        result = self.service.strict_feasible(
            constraints=constraints, strict_index=2
        )

        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, (1, -2))

    def test_inhomogeneous_bounds(self) -> None:
        constraints: List[LinearInequality] = [
            LinearInequality.of([1], constant=2),
            LinearInequality.of([-1], constant=-2),
        ]

        closed = self.service.strict_feasible(constraints=constraints)
        opened = self.service.strict_feasible(
            constraints=constraints, strict_index=0
        )

        self.assertEqual(closed.witness, (2,))
        self.assertFalse(opened.feasible)

    def test_empty_system(self) -> None:
        result = self.service.strict_feasible(constraints=[], dimension=2)

        self.assertTrue(result.feasible)
        self.assertEqual(result.witness, (0, 0))

    def test_random_witnesses_satisfy_their_systems(self) -> None:
        generator = random.Random(11)
        for _ in range(150):
            size: int = generator.randint(1, 3)
            constraints: List[LinearInequality] = [
                LinearInequality.of(
                    [generator.randint(-3, 3) for _ in range(size)],
                    constant=generator.randint(-2, 2),
                )
                for _ in range(generator.randint(1, 5))
            ]
            strict_index: int = generator.randrange(len(constraints))
            result = self.service.strict_feasible(
                constraints=constraints, strict_index=strict_index
            )
            if not result.feasible:
                continue
            assert result.witness is not None
            for position, constraint in enumerate(constraints):
                if position == strict_index:
                    constraint = constraint.as_strict()
                self.assertTrue(constraint.is_satisfied_by(result.witness))


class ConeServiceTests(SimpleTestCase):

    def test_flagship_reports(self) -> None:
        matrix = ExponentMatrix(p=2, n=3, entries=((1, 1, 0), (0, 1, 1)))

        first = report_for(matrix, (1, 2))
        second = report_for(matrix, (1, 3))
        third = report_for(matrix, (2, 3))

        self.assertEqual((first.q, first.J), (1, (2,)))
        self.assertEqual((second.q, second.J), (2, (1, 3)))
        self.assertEqual((third.q, third.J), (1, (2,)))
        self.assertTrue(all(r.contributes for r in (first, second, third)))

    def test_identity_has_full_rank_implicit_set(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 0), (0, 1)))

        report = report_for(matrix, (1, 2))

        self.assertEqual((report.q, report.J), (2, (1, 2)))
        self.assertEqual(report.vanishing, Vanishing.NONE)

    def test_empty_intersection(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 3), (0, 1)))

        report = report_for(matrix, (1, 2))

        self.assertEqual(report.vanishing, Vanishing.Q_ZERO)
        self.assertEqual(report.q, 0)
        self.assertEqual(report.witness, (1, -2))

    def test_zero_minor(self) -> None:
        matrix = ExponentMatrix(p=2, n=3, entries=((1, 2, 0), (2, 4, 1)))

        report = report_for(matrix, (1, 2))

        self.assertEqual(report.vanishing, Vanishing.ZERO_MINOR)
        self.assertIsNone(report.witness)

    def test_single_row_is_always_a_full_ray(self) -> None:
        for k in (1, 2, 5):
            matrix = ExponentMatrix(p=1, n=1, entries=((k,),))
            report = report_for(matrix, (1,))
            self.assertEqual((report.q, report.J), (1, (1,)))

    def test_integer_scaling_keeps_the_implicit_set(self) -> None:
        generator = random.Random(3)
        linalg = ExactLinalgService()
        for _ in range(40):
            entries = random_entries(generator, 2, 3)
            matrix = ExponentMatrix(p=2, n=3, entries=entries)
            scaled = ExponentMatrix(
                p=2,
                n=3,
                entries=tuple(tuple(3 * e for e in row) for row in entries),
            )
            for index in linalg.iter_indices(matrix=matrix):
                try:
                    original = report_for(matrix, index)
                except StructuralAssumptionError:
                    with self.assertRaises(StructuralAssumptionError):
                        report_for(scaled, index)
                    continue
                rescaled = report_for(scaled, index)
                self.assertEqual(original.vanishing, rescaled.vanishing)
                self.assertEqual(original.J, rescaled.J)

    def test_grid_search_matches_the_implicit_set(self) -> None:
        generator = random.Random(5)
        linalg = ExactLinalgService()
        service = ConeService()
        grid = [Fraction(v, 2) for v in range(-6, 7)]
        for _ in range(30):
            entries = random_entries(generator, 2, 3)
            matrix = ExponentMatrix(p=2, n=3, entries=entries)
            for index in linalg.iter_indices(matrix=matrix):
                try:
                    report = report_for(matrix, index)
                except StructuralAssumptionError:
                    continue
                if not report.contributes:
                    continue
                constraints = service.constraint_system(
                    matrix=matrix, index=index
                )
                strict: Set[int] = set()
                for point in product(grid, repeat=2):
                    if not all(c.is_satisfied_by(point) for c in constraints):
                        continue
                    for position, k in enumerate(index):
                        if constraints[position].as_strict().is_satisfied_by(
                            point
                        ):
                            strict.add(k)
                with self.subTest(A=entries, I=index):
                    self.assertEqual(
                        set(index) - strict, set(report.implicit)
                    )

    def test_witnesses_on_the_J_face_have_zero_sum(self) -> None:
        generator = random.Random(9)
        linalg = ExactLinalgService()
        fourier_motzkin = FourierMotzkinService()
        matrices = [ExponentMatrix(p=2, n=3, entries=((1, 1, 0), (0, 1, 1)))]
        matrices += [
            ExponentMatrix(p=2, n=3, entries=random_entries(generator, 2, 3))
            for _ in range(20)
        ]
        nonzero: int = 0
        for matrix in matrices:
            for index in linalg.iter_indices(matrix=matrix):
                try:
                    report = report_for(matrix, index)
                except StructuralAssumptionError:
                    continue
                if not report.contributes:
                    continue
                face: List[LinearInequality] = []
                for j in report.J:
                    column = matrix.column(j)
                    face.append(LinearInequality.of(column))
                    face.append(LinearInequality.of([-c for c in column]))
                face += [
                    LinearInequality.of(matrix.column(k))
                    for k in index
                    if k not in report.J
                ]

                below = fourier_motzkin.strict_feasible(
                    constraints=face + [LinearInequality.of([-1, -1])],
                    strict_index=len(face),
                )
                self.assertFalse(below.feasible)

                for _ in range(5):
                    bound = LinearInequality.of(
                        [generator.randint(-3, 3) for _ in range(2)],
                        constant=generator.randint(-2, 2),
                    )
                    result = fourier_motzkin.strict_feasible(
                        constraints=face + [bound]
                    )
                    if not result.feasible:
                        continue
                    assert result.witness is not None
                    self.assertEqual(sum(result.witness), 0)
                    nonzero += any(result.witness)
        self.assertGreater(nonzero, 0)
