class ConeError(Exception):
    pass


class InconsistentSystemError(ConeError):
    pass


class StructuralAssumptionError(ConeError):
    pass
