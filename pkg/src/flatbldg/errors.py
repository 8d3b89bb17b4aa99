"""Exception hierarchy shared by every module of the package."""


class FlatBldgError(Exception):
    """Base class for all errors raised by flatbldg."""


class MalformedSpec(FlatBldgError, ValueError):
    pass


class NonCrystallographic(FlatBldgError, ValueError):
    pass


class AsymmetricMatrix(FlatBldgError, ValueError):
    pass


class SystemMismatch(FlatBldgError, ValueError):
    pass


class NotARootVector(FlatBldgError, ValueError):
    pass


class NotDiagramCompatible(FlatBldgError, ValueError):
    pass


class EmptyInput(FlatBldgError, ValueError):
    pass


class NotAffine(FlatBldgError, ValueError):
    pass


class NotSpecialVertex(FlatBldgError, ValueError):
    pass


class NotParallel(FlatBldgError, ValueError):
    pass


class SearchBoundExceeded(FlatBldgError, RuntimeError):
    pass


class GemTooLarge(FlatBldgError, RuntimeError):
    pass


class InvalidThickness(FlatBldgError, ValueError):
    pass


class ThicknessSigmaMismatch(FlatBldgError, ValueError):
    pass


class GalleryNotMinimal(FlatBldgError, ValueError):
    pass


class NotOpposite(FlatBldgError, ValueError):
    pass


class FactorizationMismatch(FlatBldgError, ArithmeticError):
    """The scale does not factor over the flat roots.

    ``witness`` holds a JSON-friendly description of the offending data.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
