from dataclasses import dataclass

from apps.pairing.dataclasses.radial_profile_dataclass import RadialProfile


@dataclass(frozen=True)
class RadialDensity:
    """t^exponent g(t) dt on [0, R^2]; decay is the rate in log t."""

    variable: int
    exponent: int
    profile: RadialProfile
    decay: float
