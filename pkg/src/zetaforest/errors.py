"""Exception hierarchy shared across the package."""


class ZetaForestError(Exception):
    """Base class for all errors raised by this package."""


class NotInH1(ZetaForestError):
    """Word or element lies outside the y-initial subspace."""


class OrderMismatch(ZetaForestError):
    """Truncated series of different orders were combined."""


class PoleAtZero(ZetaForestError):
    """Negative power expansion requested at a zero base."""


class DepthMismatch(ZetaForestError):
    """Componentwise tuple operation on tuples of different depths."""


class BadIndex(ZetaForestError):
    """Malformed index literal or non-positive entry."""


class InvalidTree(ZetaForestError):
    """Structure fails the 2-colored rooted tree invariants."""


class NotConnected(InvalidTree):
    pass


class NotATree(InvalidTree):
    pass


class TerminalNotBlack(InvalidTree):
    pass


class NegativeEdgeIndex(InvalidTree):
    pass


class UnknownVertex(ZetaForestError):
    pass


class RootNotBlack(ZetaForestError):
    pass


class NotEssentiallyPositive(ZetaForestError):
    pass


class NotHarvestable(ZetaForestError):
    pass


class DegenerateBase(ZetaForestError):
    """A positive-index edge factor has base 0 (cannot happen for valid input)."""


class UnknownSuite(ZetaForestError):
    pass


class TreeSyntaxError(ZetaForestError):
    """Tree DSL parse failure; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
