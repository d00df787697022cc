from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence, Tuple, Union


@dataclass(frozen=True)
class LinearInequality:
    """coefficients . x >= constant, or > when strict."""

    coefficients: Tuple[Fraction, ...]
    constant: Fraction = Fraction(0)
    strict: bool = False

    @classmethod
    def of(
        cls,
        coefficients: Sequence[Union[int, Fraction]],
        constant: Union[int, Fraction] = 0,
        strict: bool = False,
    ) -> "LinearInequality":
        return cls(
            coefficients=tuple(Fraction(c) for c in coefficients),
            constant=Fraction(constant),
            strict=strict,
        )

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def as_strict(self) -> "LinearInequality":
        return replace(self, strict=True)

    def evaluate(self, point: Sequence[Fraction]) -> Fraction:
        return sum(
            (c * Fraction(x) for c, x in zip(self.coefficients, point)),
            Fraction(0),
        )

    def is_satisfied_by(self, point: Sequence[Fraction]) -> bool:
        value: Fraction = self.evaluate(point)
        if self.strict:
            return value > self.constant
        return value >= self.constant

    def holds_trivially(self) -> bool:
        if any(self.coefficients):
            raise ValueError("The inequality still has free variables.")
        if self.strict:
            return self.constant < 0
        return self.constant <= 0
