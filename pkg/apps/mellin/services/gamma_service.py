from math import factorial, pi
from typing import List, Tuple

import numpy as np
from scipy.special import loggamma

from apps.mellin.dataclasses import GammaCheck

IMAGINARY_HEIGHTS: Tuple[float, ...] = (0.5, 1.0, 2.0, 3.0, 5.0)
REFLECTION_POINTS: Tuple[complex, ...] = (
    0.3 + 0.4j,
    0.5 + 1.0j,
    0.25 - 2.0j,
    0.7 + 0.1j,
    -0.5 + 0.5j,
)


class GammaService:
    """Complex Gamma products evaluated through scipy's log-Gamma."""

    def log_product(
        self, *, rows: np.ndarray, nodes: np.ndarray
    ) -> np.ndarray:
        """log prod_l Gamma(1 - i * rows[l] . y) for every node y."""
        arguments: np.ndarray = 1.0 - 1j * (nodes @ rows.T)
        return loggamma(arguments).sum(axis=-1)

    def gamma(self, *, z: np.ndarray) -> np.ndarray:
        return np.exp(loggamma(np.asarray(z, dtype=complex)))

    def test_vector(self) -> List[GammaCheck]:
        checks: List[GammaCheck] = []

        for n in range(1, 6):
            checks.append(
                GammaCheck(
                    label=f"Gamma({n + 1}) = {n}!",
                    argument=complex(n + 1),
                    expected=complex(factorial(n)),
                    computed=complex(self.gamma(z=np.array(n + 1.0))),
                )
            )

        for y in IMAGINARY_HEIGHTS:
            value = complex(self.gamma(z=np.array(1.0 + 1j * y)))
            checks.append(
                GammaCheck(
                    label=f"|Gamma(1+{y}i)|^2 = pi y / sinh(pi y)",
                    argument=complex(1.0, y),
                    expected=complex(pi * y / np.sinh(pi * y)),
                    computed=complex(abs(value) ** 2),
                )
            )

        for y in IMAGINARY_HEIGHTS:
            value = complex(self.gamma(z=np.array(0.5 + 1j * y)))
            checks.append(
                GammaCheck(
                    label=f"|Gamma(1/2+{y}i)|^2 = pi / cosh(pi y)",
                    argument=complex(0.5, y),
                    expected=complex(pi / np.cosh(pi * y)),
                    computed=complex(abs(value) ** 2),
                )
            )

        for z in REFLECTION_POINTS:
            product = complex(
                np.exp(loggamma(complex(z)) + loggamma(complex(1 - z)))
            )
            checks.append(
                GammaCheck(
                    label=f"Gamma({z})Gamma(1-{z}) = pi / sin(pi z)",
                    argument=z,
                    expected=complex(pi / np.sin(pi * z)),
                    computed=product,
                )
            )

        return checks
