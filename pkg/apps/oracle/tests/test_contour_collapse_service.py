from django.test import SimpleTestCase, tag

from apps.linalg.dataclasses import ExponentMatrix
from apps.oracle.dataclasses import ContourCollapseReport
from apps.oracle.exceptions import ContourCollapseSkippedError
from apps.oracle.services import ContourCollapseService
from apps.oracle.tests.factories import single_form

FLAGSHIP: ExponentMatrix = ExponentMatrix(
    p=2, n=3, entries=((1, 1, 0), (0, 1, 1))
)


class ContourCollapseSkipTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = ContourCollapseService()

    def test_three_contours_are_not_summed(self) -> None:
        matrix = ExponentMatrix(
            p=3, n=3, entries=((1, 0, 0), (0, 1, 0), (0, 0, 1))
        )

        with self.assertRaises(ContourCollapseSkippedError):
            self.service.contour_collapse_check(
                matrix=matrix,
                form=single_form(3, (1, 2, 3), {}),
                index=(1, 2, 3),
            )

    def test_degenerate_minor(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 1), (1, 1)))

        with self.assertRaises(ContourCollapseSkippedError):
            self.service.contour_collapse_check(
                matrix=matrix,
                form=single_form(2, (1, 2), {}),
                index=(1, 2),
            )

    def test_all_poles_taken_leaves_nothing(self) -> None:
        with self.assertRaises(ContourCollapseSkippedError):
            self.service.contour_collapse_check(
                matrix=FLAGSHIP,
                form=single_form(3, (1, 3), {2: (2, 0)}),
                index=(1, 3),
            )


@tag("slow")
class ContourCollapseTests(SimpleTestCase):

    def test_one_pole_collapses_onto_a_line_integral(self) -> None:
        form = single_form(3, (1, 2), {2: (1, 0), 3: (1, 0)})

        report: ContourCollapseReport = (
            ContourCollapseService().contour_collapse_check(
                matrix=FLAGSHIP, form=form, index=(1, 2)
            )
        )

        self.assertEqual(report.q, 1)
        self.assertNotEqual(report.collapsed, 0)
        self.assertTrue(report.passed)

    def test_empty_cone_collapses_to_zero(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 3), (0, 1)))

        report: ContourCollapseReport = (
            ContourCollapseService().contour_collapse_check(
                matrix=matrix,
                form=single_form(2, (1, 2), {2: (3, 0)}),
                index=(1, 2),
            )
        )

        self.assertEqual(report.q, 0)
        self.assertEqual(report.collapsed, 0)
