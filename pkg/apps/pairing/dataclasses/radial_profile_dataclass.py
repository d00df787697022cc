from dataclasses import dataclass
from typing import Tuple

from apps.pairing.choices import ProfileFamily
from apps.pairing.exceptions import InvalidProfileError


@dataclass(frozen=True)
class RadialProfile:
    """Radial factor g(t), t = |zeta|^2, supported in t < R^2.

    plateau equals 1 on t <= rho^2 and annulus vanishes there; rho is
    inner_radius.
    """

    family: ProfileFamily
    support_radius: float = 1.0
    inner_radius: float = 0.0

    def __post_init__(self) -> None:
        if not self.support_radius > 0:
            raise InvalidProfileError("The support radius must be positive.")
        if self.family == ProfileFamily.BUMP:
            return
        if not 0 < self.inner_radius < self.support_radius:
            raise InvalidProfileError(
                f"A {self.family} profile needs 0 < inner radius < support "
                "radius."
            )

    @property
    def value_at_zero(self) -> float:
        return 0.0 if self.family == ProfileFamily.ANNULUS else 1.0

    @property
    def taylor(self) -> Tuple[float, ...]:
        if self.family == ProfileFamily.BUMP:
            r2: float = self.support_radius**2
            return (1.0, -1 / r2, -1 / (2 * r2**2), -1 / (6 * r2**3))
        return (self.value_at_zero, 0.0, 0.0, 0.0)
