from dataclasses import dataclass


@dataclass(frozen=True)
class GammaCheck:
    label: str
    argument: complex
    expected: complex
    computed: complex

    @property
    def relative_error(self) -> float:
        return abs(self.computed - self.expected) / abs(self.expected)
