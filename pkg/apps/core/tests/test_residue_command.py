import json
from io import StringIO
from typing import Any

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, tag

FLAGSHIP: str = "[[1,1,0],[0,1,1]]"
EMPTY_CONE: str = "[[1,3],[0,1]]"
LINE_FORM: str = '{"components": [{"I": [1], "coefficients": [{}]}]}'
STANDARD_PAIR: str = json.dumps(
    {"dim": 1, "gamma_rows": [["1"], ["-1"]], "power_exponents": [[[1, "1"]]]}
)


def residue(*args: str) -> str:
    out = StringIO()
    call_command("residue", *args, stdout=out)
    return out.getvalue()


def residue_json(*args: str) -> Any:
    return json.loads(residue(*args, "--format", "json"))


class StructureCommandTests(SimpleTestCase):

    def test_flagship_terms(self) -> None:
        document = residue_json("structure", "--matrix", FLAGSHIP)

        self.assertEqual(
            [term["I"] for term in document["terms"]],
            [[1, 2], [1, 3], [2, 3]],
        )
        self.assertEqual(document["skipped"], [])

    def test_text_report_lists_the_terms(self) -> None:
        output = residue("structure", "--matrix", FLAGSHIP)

        self.assertIn("I=[1, 3]", output)
        self.assertIn("∂̄[1/ζ2^2]", output)

    def test_empty_cone_is_skipped(self) -> None:
        document = residue_json("structure", "--matrix", EMPTY_CONE)

        self.assertEqual(document["terms"], [])
        self.assertEqual(document["skipped"][0]["reason"], "q_zero")


class AnalyzeCommandTests(SimpleTestCase):

    def test_empty_cone_has_a_witness(self) -> None:
        document = residue_json("analyze", "--matrix", EMPTY_CONE)

        (report,) = document["reports"]
        self.assertEqual(report["I"], [1, 2])
        self.assertEqual(report["q"], 0)
        self.assertEqual(report["vanishing"], "q_zero")
        self.assertEqual(report["witness"], ["1", "-2"])

    def test_matrix_document_form(self) -> None:
        document = residue_json(
            "analyze", "--matrix", '{"p": 1, "n": 2, "A": [[1, 2]]}'
        )

        self.assertEqual(len(document["reports"]), 2)


class CommandErrorTests(SimpleTestCase):

    def test_negative_entry_is_a_schema_error(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue("structure", "--matrix", "[[1,-1],[0,1]]")

        self.assertEqual(context.exception.returncode, 2)

    def test_malformed_json(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue("analyze", "--matrix", "[[1,")

        self.assertEqual(context.exception.returncode, 2)

    def test_unknown_format(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue("structure", "--matrix", FLAGSHIP, "--format", "xml")

        self.assertEqual(context.exception.returncode, 2)

    def test_testform_without_matrix(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue("verify", "--testform", LINE_FORM)

        self.assertEqual(context.exception.returncode, 2)


class EvalCommandTests(SimpleTestCase):

    def test_one_variable(self) -> None:
        document = residue_json(
            "eval", "--matrix", "[[1]]", "--testform", LINE_FORM
        )

        self.assertAlmostEqual(document["value"][0], 1.0, 6)
        self.assertEqual(document["convention"], "bochner_martinelli")


class MBCommandTests(SimpleTestCase):

    def test_standard_pair(self) -> None:
        document = residue_json(
            "mb", "--spec", STANDARD_PAIR, "--bases", "0.25"
        )

        self.assertAlmostEqual(document["value"], 0.16, 9)

    def test_base_count_must_match(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue("mb", "--spec", STANDARD_PAIR, "--bases", "0.25,0.5")

        self.assertEqual(context.exception.returncode, 2)


class VerifyCommandTests(SimpleTestCase):

    def test_single_case_from_the_command_line(self) -> None:
        document = residue_json(
            "verify",
            "--matrix",
            "[[1]]",
            "--testform",
            LINE_FORM,
            "--taus",
            "1e-3,2.5e-4,6.25e-5,1.5625e-5,3.90625e-6",
            "--strict",
        )

        self.assertTrue(document["passed"])
        self.assertFalse(document["vacuous"])
        self.assertEqual(document["cases"][0]["name"], "command line")

    def test_too_few_taus(self) -> None:
        with self.assertRaises(CommandError) as context:
            residue(
                "verify",
                "--matrix",
                "[[1]]",
                "--testform",
                LINE_FORM,
                "--taus",
                "1e-3,1e-4",
            )

        self.assertEqual(context.exception.returncode, 2)


@tag("slow")
class SelfcheckCommandTests(SimpleTestCase):

    def test_seeded_selfcheck_passes(self) -> None:
        document = residue_json("selfcheck", "--seed", "7", "--strict")

        self.assertTrue(document["passed"])
        self.assertEqual(document["exactness"]["seed"], 7)
