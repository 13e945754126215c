"""Exception hierarchy shared by every module of the package."""


class PosetError(Exception):
    pass


class DuplicateElement(PosetError):
    pass


class UnknownElement(PosetError):
    pass


class RelationCycle(PosetError):
    """The declared relations contain a directed cycle.

    ``cycle`` holds the offending labels in order, closing back on the first.
    """

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("relations contain a cycle: " + " < ".join(self.cycle + self.cycle[:1]))


class ElementCollision(PosetError):
    pass


class SizeLimitExceeded(PosetError):
    pass


class NotUnicycle(PosetError):
    pass


class NotATree(PosetError):
    pass


class InvalidDecomposition(PosetError):
    pass


class NoMinimum(PosetError):
    pass


class NotExtremal(PosetError):
    pass


class InvalidTree(PosetError):
    pass


class PreconditionViolated(PosetError):
    pass


class InvalidSize(PosetError):
    pass


class OutOfRange(PosetError):
    pass


class UnsupportedClass(PosetError):
    pass


class CapExceeded(PosetError):
    pass


class InvalidModel(PosetError):
    pass


class ParseError(PosetError):
    """Malformed input file; ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
