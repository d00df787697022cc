from apps.core.exceptions import NumericalNonconvergenceError


class MellinBarnesError(Exception):
    pass


class ContourPoleError(MellinBarnesError):
    pass


class NonSimplePoleError(MellinBarnesError):
    pass


class MellinBarnesNonconvergentError(
    MellinBarnesError, NumericalNonconvergenceError
):
    pass
