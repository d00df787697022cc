class ResidueError(Exception):
    pass


class NumericalNonconvergenceError(ResidueError):
    pass


class SchemaError(ResidueError):
    pass
