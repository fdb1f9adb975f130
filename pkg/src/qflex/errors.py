class QFlexError(Exception):
    """Base class for all library errors."""


class ShapeError(QFlexError, ValueError):
    """Dimensions of matrices, vectors or maps do not agree."""


class DomainError(QFlexError, ValueError):
    """Operands belong to different algebras, or parameters disagree."""


class ParseError(QFlexError, ValueError):
    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class PreconditionError(QFlexError):
    """An operation was handed an input that failed its required check.

    The failing :class:`~qflex.algebra.CheckReport` is kept on ``report``.
    """

    def __init__(self, message: str, report=None):
        self.report = report
        super().__init__(message)
