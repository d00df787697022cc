class StructureError(Exception):
    pass


class FactorPartitionError(StructureError):
    pass


class TermDocumentError(StructureError):
    pass
