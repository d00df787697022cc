from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from apps.structure.choices import RenderFormat
from apps.structure.dataclasses import CurrentTerm, Decomposition, MBSpec
from apps.structure.exceptions import TermDocumentError

DBAR: str = "∂̄"
ZETA: str = "ζ"
ZETA_BAR: str = "ζ̄"
MINUS: str = "−"
WEDGE: str = " ∧ "

Document = Dict[str, Any]


class TermRenderService:

    def render(
        self, *, term: CurrentTerm, format: RenderFormat = RenderFormat.TEXT
    ) -> Union[str, Document]:
        if format == RenderFormat.STRUCTURED:
            return self.to_document(term=term)
        return self.render_text(term=term)

    def render_text(self, *, term: CurrentTerm) -> str:
        factors: List[str] = [
            f"{DBAR}[1/{ZETA}{j}^{power}]" for j, power in term.dbar_factors
        ]
        factors += [
            f"(1/({ZETA}{k}^{power} {self._conjugate(k, conj_power)}))"
            for k, power, conj_power in term.conj_pv_factors
        ]
        factors += [
            f"[1/{ZETA}{variable}^{power}]"
            for variable, power in term.pv_factors
        ]

        sign: str = "+" if term.sign * term.delta_sign > 0 else MINUS
        text: str = f"{sign} {WEDGE.join(factors)}"
        if term.mb is not None:
            arguments: str = ",".join(
                f"|{ZETA}{variable}|²" for variable in term.f_variables
            )
            text += f" · F({arguments})"
        return text

    def _conjugate(self, variable: int, power: int) -> str:
        if power == 1:
            return f"{ZETA_BAR}{variable}"
        return f"{ZETA_BAR}{variable}^{power}"

    def to_document(self, *, term: CurrentTerm) -> Document:
        return {
            "I": list(term.index),
            "J": list(term.J),
            "sign": term.sign,
            "delta_sign": term.delta_sign,
            "dbar": [
                {"variable": j, "power": power}
                for j, power in term.dbar_factors
            ],
            "conj_pv": [
                {"variable": k, "power": power, "conj_power": conj_power}
                for k, power, conj_power in term.conj_pv_factors
            ],
            "pv": [
                {"variable": variable, "power": power}
                for variable, power in term.pv_factors
            ],
            "mb": (
                None
                if term.mb is None
                else self.mb_spec_to_document(spec=term.mb)
            ),
            "prefactor_exponent": term.prefactor_exponent,
        }

    def mb_spec_to_document(self, *, spec: MBSpec) -> Document:
        return {
            "dim": spec.dim,
            "active": list(spec.active),
            "gamma_rows": [
                [str(value) for value in row] for row in spec.gamma_rows
            ],
            "power_exponents": [
                [[variable, str(exponent)] for variable, exponent in pairs]
                for pairs in spec.power_exponents
            ],
        }

    def decomposition_to_document(
        self, *, decomposition: Decomposition
    ) -> Document:
        return {
            "p": decomposition.matrix.p,
            "n": decomposition.matrix.n,
            "A": [list(row) for row in decomposition.matrix.entries],
            "terms": [
                self.to_document(term=term) for term in decomposition.terms
            ],
            "skipped": [
                {"I": list(skipped.index), "reason": str(skipped.reason)}
                for skipped in decomposition.skipped
            ],
        }

    def parse(self, *, document: Document) -> CurrentTerm:
        try:
            mb_document: Optional[Document] = document["mb"]
            return CurrentTerm(
                index=tuple(int(k) for k in document["I"]),
                J=tuple(int(j) for j in document["J"]),
                sign=int(document["sign"]),
                delta_sign=int(document.get("delta_sign", 1)),
                dbar_factors=tuple(
                    (int(f["variable"]), int(f["power"]))
                    for f in document["dbar"]
                ),
                conj_pv_factors=tuple(
                    (
                        int(f["variable"]),
                        int(f["power"]),
                        int(f.get("conj_power", 1)),
                    )
                    for f in document["conj_pv"]
                ),
                pv_factors=tuple(
                    (int(f["variable"]), int(f["power"]))
                    for f in document["pv"]
                ),
                mb=(
                    None
                    if mb_document is None
                    else self.parse_mb_spec(document=mb_document)
                ),
                prefactor_exponent=int(document["prefactor_exponent"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise TermDocumentError(f"Malformed term document: {exc}") from exc

    def parse_mb_spec(self, *, document: Document) -> MBSpec:
        try:
            gamma_rows = tuple(
                tuple(Fraction(str(value)) for value in row)
                for row in document["gamma_rows"]
            )
            power_exponents = tuple(
                tuple(
                    (int(variable), Fraction(str(exponent)))
                    for variable, exponent in pairs
                )
                for pairs in document["power_exponents"]
            )
            dim: int = int(document["dim"])
            active = tuple(
                int(k)
                for k in document.get(
                    "active", [pairs[0][0] for pairs in power_exponents]
                )
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise TermDocumentError(f"Malformed MB document: {exc}") from exc

        if len(power_exponents) != dim or len(active) != dim:
            raise TermDocumentError(
                f"The MB document declares dim={dim} but lists "
                f"{len(power_exponents)} bases."
            )
        if any(len(row) != dim for row in gamma_rows):
            raise TermDocumentError(
                "Every Gamma row needs one coefficient per active variable."
            )

        return MBSpec(
            dim=dim,
            active=active,
            gamma_rows=gamma_rows,
            power_exponents=power_exponents,
        )
