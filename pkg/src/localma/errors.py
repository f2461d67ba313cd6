"""Exception types raised across the package."""


class LocalMAError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(LocalMAError):
    pass


class ShapeMismatch(LocalMAError):
    pass


class LengthMismatch(LocalMAError):
    pass


class NonFiniteValue(LocalMAError):
    pass


class NotOnSimplex(LocalMAError):
    pass


class NotOneHot(LocalMAError):
    pass


class EmptySplit(LocalMAError):
    pass


class BadDims(LocalMAError):
    pass


class NonFiniteLoss(LocalMAError):
    pass


class LabelOutOfRange(LocalMAError):
    pass


class BadConfig(LocalMAError):
    pass


class ParseError(LocalMAError):
    pass


class LayoutMismatch(LocalMAError):
    pass


class VersionMismatch(LocalMAError):
    pass


class CorruptFile(LocalMAError):
    pass
