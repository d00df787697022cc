from apps.core.exceptions import NumericalNonconvergenceError


class PairingError(Exception):
    pass


class InvalidProfileError(PairingError):
    pass


class InvalidTestFormError(PairingError):
    pass


class QuadratureNonconvergentError(
    PairingError, NumericalNonconvergenceError
):
    pass
