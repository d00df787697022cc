from dataclasses import dataclass


@dataclass(frozen=True)
class SelfcheckPoint:
    pair: str
    t: float
    expected: float
    computed: float

    @property
    def deviation(self) -> float:
        return abs(self.computed - self.expected)
