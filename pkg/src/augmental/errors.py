class AugmentalError(Exception):
    """Base class for errors raised by this package."""


class MalformedFaceError(AugmentalError, ValueError):
    pass


class VoidComplexError(AugmentalError, ValueError):
    pass


class PairError(AugmentalError, ValueError):
    pass


class FaceNotPresentError(AugmentalError, KeyError):
    pass


class ClassificationError(AugmentalError, ValueError):
    """Input is outside the class an operation is defined on."""


class PreconditionError(AugmentalError, ValueError):
    pass
