from apps.core.exceptions import NumericalNonconvergenceError


class OracleError(Exception):
    pass


class NonconvergentFitError(OracleError, NumericalNonconvergenceError):
    pass


class OracleQuadratureError(OracleError, NumericalNonconvergenceError):
    pass


class NonintegrableParametersError(OracleError):
    pass


class PoleProbePreconditionError(OracleError):
    pass


class RadiiOutsideSupportError(OracleError):
    pass


class ContourCollapseSkippedError(OracleError):
    pass


class CaseFileError(OracleError):
    pass
