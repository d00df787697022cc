from math import ceil, log
from typing import Tuple, Union

import numpy as np
from scipy.special import roots_legendre

from apps.pairing.choices import ProfileFamily
from apps.pairing.dataclasses import RadialProfile
from apps.pairing.exceptions import InvalidProfileError

PANEL_WIDTH: float = 0.25
PANEL_NODES: int = 16
BUMP_DECAY_LENGTH: float = 40.0
MAX_LOG_LENGTH: float = 400.0
CHUNK_ELEMENTS: int = 1 << 22

ArrayLike = Union[float, np.ndarray]


class ProfileService:
    """Values and Mellin transforms of the radial profiles g(t)."""

    def value(self, *, profile: RadialProfile, t: ArrayLike) -> np.ndarray:
        shape: Tuple[int, ...] = np.shape(t)
        t = np.atleast_1d(np.asarray(t, dtype=float))
        outer: float = profile.support_radius**2
        values: np.ndarray = np.zeros_like(t)

        if profile.family == ProfileFamily.BUMP:
            inside = (t >= 0) & (t < outer)
            values[inside] = np.exp(-t[inside] / (outer - t[inside]))
            return values.reshape(shape)

        inner: float = profile.inner_radius**2
        s: np.ndarray = np.clip((t - inner) / (outer - inner), 0.0, 1.0)
        if profile.family == ProfileFamily.PLATEAU:
            values = self._smoothstep(1.0 - s)
            values[t <= inner] = 1.0
            values[t >= outer] = 0.0
            return values.reshape(shape)

        if profile.family == ProfileFamily.ANNULUS:
            inside = (t > inner) & (t < outer)
            s_inside: np.ndarray = s[inside]
            values[inside] = np.exp(
                1.0 - 1.0 / (4.0 * s_inside * (1.0 - s_inside))
            )
            return values.reshape(shape)

        raise InvalidProfileError(f"Unknown profile family {profile.family}.")

    def _flat(self, x: np.ndarray) -> np.ndarray:
        result: np.ndarray = np.zeros_like(x)
        positive = x > 0
        result[positive] = np.exp(-1.0 / x[positive])
        return result

    def _smoothstep(self, x: np.ndarray) -> np.ndarray:
        rising: np.ndarray = self._flat(x)
        return rising / (rising + self._flat(1.0 - x))

    def _log_length(
        self, *, profile: RadialProfile, sigma: np.ndarray
    ) -> float:
        if profile.family != ProfileFamily.BUMP:
            return log(profile.support_radius**2 / profile.inner_radius**2)
        rate: float = float(np.min(sigma.real)) + 1.0
        return min(BUMP_DECAY_LENGTH / rate, MAX_LOG_LENGTH)

    def _panels(self, *, length: float) -> Tuple[np.ndarray, np.ndarray]:
        count: int = max(1, ceil(length / PANEL_WIDTH))
        width: float = length / count
        roots, weights = roots_legendre(PANEL_NODES)
        starts: np.ndarray = np.arange(count) * width
        nodes: np.ndarray = (
            starts[:, None] + (roots[None, :] + 1.0) * width / 2
        ).ravel()
        return nodes, np.tile(weights * width / 2, count)

    def mellin_transform(
        self, *, profile: RadialProfile, sigma: Union[complex, np.ndarray]
    ) -> Union[complex, np.ndarray]:
        """integral over t > 0 of t^(sigma - 1) g(t), continued past 0.

        With t = R^2 e^-v the constant g(0) integrates in closed form;
        the remainder converges for Re sigma > -1.
        """
        sigma_array: np.ndarray = np.atleast_1d(
            np.asarray(sigma, dtype=complex)
        )
        g0: float = profile.value_at_zero
        if g0 != 0.0:
            if np.any(sigma_array.real <= -1.0):
                raise InvalidProfileError(
                    "The Mellin transform of a profile with g(0) != 0 "
                    "needs Re sigma > -1."
                )
            if np.any(sigma_array == 0):
                raise InvalidProfileError(
                    "sigma = 0 is the pole of the Mellin transform."
                )

        outer: float = profile.support_radius**2
        nodes, weights = self._panels(
            length=self._log_length(profile=profile, sigma=sigma_array)
        )
        excess: np.ndarray = (
            self.value(profile=profile, t=outer * np.exp(-nodes)) - g0
        ) * weights

        result: np.ndarray = np.empty_like(sigma_array)
        chunk: int = max(1, CHUNK_ELEMENTS // nodes.size)
        for start in range(0, sigma_array.size, chunk):
            block: np.ndarray = sigma_array[start : start + chunk]
            result[start : start + chunk] = np.exp(
                -np.outer(block, nodes)
            ) @ excess
        result *= outer**sigma_array
        if g0 != 0.0:
            result += g0 * outer**sigma_array / sigma_array

        if np.ndim(sigma) == 0:
            return complex(result[0])
        return result.reshape(np.shape(sigma))
