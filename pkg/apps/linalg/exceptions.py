class LinalgError(Exception):
    pass


class InvalidExponentMatrixError(LinalgError):
    pass


class MalformedIndexError(LinalgError):
    pass


class SingularMatrixError(LinalgError):
    pass
