import random
from fractions import Fraction
from typing import List, Tuple

from django.test import SimpleTestCase

from apps.cones.choices import Vanishing
from apps.cones.exceptions import StructuralAssumptionError
from apps.linalg.dataclasses import ExponentMatrix
from apps.structure.choices import RenderFormat
from apps.structure.dataclasses import CurrentTerm, Decomposition
from apps.structure.exceptions import TermDocumentError
from apps.structure.services import StructureService, TermRenderService

FLAGSHIP: ExponentMatrix = ExponentMatrix(
    p=2, n=3, entries=((1, 1, 0), (0, 1, 1))
)
IDENTITY: ExponentMatrix = ExponentMatrix(p=2, n=2, entries=((1, 0), (0, 1)))


class SignConstantTests(SimpleTestCase):

    def test_known_signs(self) -> None:
        service = StructureService()

        self.assertEqual(service.sign_constant(index=(1, 2), p=2, n=2), 1)
        self.assertEqual(service.sign_constant(index=(1, 2), p=2, n=3), -1)
        self.assertEqual(service.sign_constant(index=(1, 3), p=2, n=3), 1)
        self.assertEqual(service.sign_constant(index=(2, 3), p=2, n=3), -1)


class DecomposeTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = StructureService()

    def test_identity_has_a_single_dbar_term(self) -> None:
        decomposition: Decomposition = self.service.decompose(
            matrix=IDENTITY
        )

        self.assertEqual(len(decomposition.terms), 1)
        term: CurrentTerm = decomposition.terms[0]
        self.assertEqual(term.sign, 1)
        self.assertEqual(term.dbar_factors, ((1, 1), (2, 1)))
        self.assertEqual(term.conj_pv_factors, ())
        self.assertEqual(term.pv_factors, ())
        self.assertIsNone(term.mb)
        self.assertEqual(term.prefactor_exponent, 0)

    def test_flagship_terms(self) -> None:
        decomposition: Decomposition = self.service.decompose(
            matrix=FLAGSHIP
        )
        first, second, third = decomposition.terms

        self.assertEqual(
            [t.index for t in decomposition.terms], [(1, 2), (1, 3), (2, 3)]
        )
        self.assertEqual([t.sign for t in decomposition.terms], [-1, 1, -1])
        self.assertEqual(
            [t.J for t in decomposition.terms], [(2,), (1, 3), (2,)]
        )

        self.assertEqual(first.dbar_factors, ((2, 2),))
        self.assertEqual(first.conj_pv_factors, ((1, 1, 1),))
        self.assertEqual(first.pv_factors, ((3, 1),))
        assert first.mb is not None
        self.assertEqual(first.mb.dim, 1)
        self.assertEqual(first.mb.gamma_rows, ((1,), (-1,)))
        self.assertEqual(
            first.mb.power_exponents, (((1, Fraction(1)), (3, Fraction(-1))),)
        )

        self.assertEqual(second.dbar_factors, ((1, 1), (3, 1)))
        self.assertEqual(second.pv_factors, ((2, 2),))
        self.assertIsNone(second.mb)

        self.assertEqual(third.conj_pv_factors, ((3, 1, 1),))
        self.assertEqual(third.pv_factors, ((1, 1),))
        assert third.mb is not None
        self.assertEqual(third.mb.gamma_rows, ((-1,), (1,)))
        self.assertEqual(
            third.mb.power_exponents, (((3, Fraction(1)), (1, Fraction(-1))),)
        )
        self.assertEqual(decomposition.skipped, ())

    def test_empty_intersection_is_skipped(self) -> None:
        matrix = ExponentMatrix(p=2, n=2, entries=((1, 3), (0, 1)))

        decomposition: Decomposition = self.service.decompose(matrix=matrix)

        self.assertTrue(decomposition.is_empty)
        self.assertEqual(decomposition.skipped[0].index, (1, 2))
        self.assertEqual(decomposition.skipped[0].reason, Vanishing.Q_ZERO)

    def test_diagonal_matrices_give_one_dbar_term(self) -> None:
        for diagonal in ((1, 1), (2, 1), (2, 3), (4, 2, 3)):
            size: int = len(diagonal)
            matrix = ExponentMatrix(
                p=size,
                n=size,
                entries=tuple(
                    tuple(diagonal[i] if i == j else 0 for j in range(size))
                    for i in range(size)
                ),
            )
            with self.subTest(diagonal=diagonal):
                (term,) = self.service.decompose(matrix=matrix).terms
                self.assertEqual(
                    term.dbar_factors, tuple(enumerate(diagonal, start=1))
                )
                self.assertIsNone(term.mb)

    def test_random_terms_partition_the_variables(self) -> None:
        generator = random.Random(17)
        for _ in range(60):
            p: int = generator.randint(1, 3)
            n: int = generator.randint(p, 4)
            rows: List[Tuple[int, ...]] = []
            while len(rows) < p:
                row = tuple(generator.randint(0, 3) for _ in range(n))
                if any(row):
                    rows.append(row)
            matrix = ExponentMatrix(p=p, n=n, entries=tuple(rows))
            try:
                decomposition = self.service.decompose(matrix=matrix)
            except StructuralAssumptionError:
                continue
            for term in decomposition.terms:
                self.service.check_partition(term=term, p=p, n=n)
                self.assertGreaterEqual(term.q, 1)


class TermRenderServiceTests(SimpleTestCase):

    def setUp(self) -> None:
        self.service = TermRenderService()
        self.terms = StructureService().decompose(matrix=FLAGSHIP).terms

    def test_identity_text(self) -> None:
        (term,) = StructureService().decompose(matrix=IDENTITY).terms

        self.assertEqual(
            self.service.render_text(term=term),
            "+ ∂̄[1/ζ1^1] ∧ ∂̄[1/ζ2^1]",
        )

    def test_flagship_text(self) -> None:
        self.assertEqual(
            self.service.render(term=self.terms[0]),
            "− ∂̄[1/ζ2^2] ∧ "
            "(1/(ζ1^1 ζ̄1)) ∧ [1/ζ3^1] "
            "· F(|ζ1|²,|ζ3|²)",
        )

    def test_structured_documents_parse_back(self) -> None:
        for term in self.terms:
            document = self.service.render(
                term=term, format=RenderFormat.STRUCTURED
            )
            assert isinstance(document, dict)
            self.assertEqual(self.service.parse(document=document), term)

    def test_rational_exponents_are_strings(self) -> None:
        document = self.service.to_document(term=self.terms[0])

        self.assertEqual(document["mb"]["gamma_rows"], [["1"], ["-1"]])
        self.assertEqual(
            document["mb"]["power_exponents"], [[[1, "1"], [3, "-1"]]]
        )

    def test_malformed_document(self) -> None:
        with self.assertRaises(TermDocumentError):
            self.service.parse(document={"I": [1, 2]})
        with self.assertRaises(TermDocumentError):
            self.service.parse_mb_spec(
                document={
                    "dim": 2,
                    "gamma_rows": [["1"]],
                    "power_exponents": [[[1, "1"]]],
                }
            )
