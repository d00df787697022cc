from typing import Any, Dict, List, Tuple

from apps.pairing.choices import ProfileFamily
from apps.pairing.dataclasses import (
    RadialProfile,
    SeparableCoefficient,
    TestForm,
    VariableFactor,
)
from apps.pairing.exceptions import InvalidProfileError, InvalidTestFormError

Document = Dict[str, Any]

DEFAULT_PROFILE: RadialProfile = RadialProfile(family=ProfileFamily.BUMP)


class TestFormDocumentService:
    """JSON documents of test forms.

    Variables a coefficient leaves out default to degree (0, 0) with
    the unit bump profile; complex weights are [re, im] pairs.
    """

    def parse_profile(self, *, document: Document) -> RadialProfile:
        try:
            family = ProfileFamily(document.get("family", ProfileFamily.BUMP))
            return RadialProfile(
                family=family,
                support_radius=float(document.get("R", 1.0)),
                inner_radius=float(document.get("rho", 0.0)),
            )
        except (AttributeError, TypeError, ValueError) as exc:
            raise InvalidTestFormError(f"Malformed profile: {exc}") from exc
        except InvalidProfileError as exc:
            raise InvalidTestFormError(str(exc)) from exc

    def parse_weight(self, *, value: Any) -> complex:
        if isinstance(value, (list, tuple)):
            if len(value) != 2:
                raise InvalidTestFormError(
                    "A complex weight is an [re, im] pair."
                )
            return complex(float(value[0]), float(value[1]))
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidTestFormError(f"Malformed weight {value!r}.")
        return complex(value)

    def parse_coefficient(
        self, *, document: Document, n: int
    ) -> SeparableCoefficient:
        factors: Dict[int, VariableFactor] = {}
        try:
            for entry in document.get("factors", []):
                variable: int = int(entry["variable"])
                if not 1 <= variable <= n or variable in factors:
                    raise InvalidTestFormError(
                        f"Variable {variable} is repeated or outside 1..{n}."
                    )
                factors[variable] = VariableFactor(
                    variable=variable,
                    holomorphic=int(entry.get("a", 0)),
                    antiholomorphic=int(entry.get("b", 0)),
                    profile=self.parse_profile(
                        document=entry.get("profile", {})
                    ),
                )
            weight: complex = self.parse_weight(
                value=document.get("weight", 1.0)
            )
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise InvalidTestFormError(
                f"Malformed coefficient: {exc}"
            ) from exc

        return SeparableCoefficient(
            factors=tuple(
                factors.get(
                    variable,
                    VariableFactor(
                        variable=variable,
                        holomorphic=0,
                        antiholomorphic=0,
                        profile=DEFAULT_PROFILE,
                    ),
                )
                for variable in range(1, n + 1)
            ),
            weight=weight,
        )

    def parse(self, *, document: Document, n: int) -> TestForm:
        if not isinstance(document, dict):
            raise InvalidTestFormError("A test form is a JSON object.")
        components: Dict[Tuple[int, ...], Tuple[SeparableCoefficient, ...]]
        components = {}
        try:
            if int(document.get("n", n)) != n:
                raise InvalidTestFormError(
                    f"The test form declares n={document['n']}, the "
                    f"matrix has n={n}."
                )
            for entry in document["components"]:
                index: Tuple[int, ...] = tuple(int(k) for k in entry["I"])
                if index in components:
                    raise InvalidTestFormError(
                        f"The component I={index} appears twice."
                    )
                components[index] = tuple(
                    self.parse_coefficient(document=coefficient, n=n)
                    for coefficient in entry["coefficients"]
                )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidTestFormError(f"Malformed test form: {exc}") from exc

        return TestForm(n=n, components=components)

    def to_document(self, *, form: TestForm) -> Document:
        components: List[Document] = []
        for index in sorted(form.components):
            components.append(
                {
                    "I": list(index),
                    "coefficients": [
                        {
                            "weight": [
                                coefficient.weight.real,
                                coefficient.weight.imag,
                            ],
                            "factors": [
                                {
                                    "variable": factor.variable,
                                    "a": factor.holomorphic,
                                    "b": factor.antiholomorphic,
                                    "profile": {
                                        "family": str(factor.profile.family),
                                        "R": factor.profile.support_radius,
                                        "rho": factor.profile.inner_radius,
                                    },
                                }
                                for factor in coefficient.factors
                            ],
                        }
                        for coefficient in form.components[index]
                    ],
                }
            )
        return {"n": form.n, "components": components}
