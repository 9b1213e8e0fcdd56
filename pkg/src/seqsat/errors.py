"""Exception types raised across the package."""


class SeqSatError(Exception):
    """Base class for all domain errors."""


class ParseError(SeqSatError, ValueError):
    pass


class EmptyInput(ParseError):
    pass


class InvalidCharacter(ParseError):
    pass


class IndexOutOfRange(SeqSatError, IndexError):
    pass


class LetterOutOfAlphabet(SeqSatError, ValueError):
    pass


class GapOutOfRange(SeqSatError, IndexError):
    pass


class AlphabetTooSmall(SeqSatError, ValueError):
    pass


class NotThreeLetters(SeqSatError, ValueError):
    pass


class ShapeMismatch(SeqSatError, ValueError):
    pass


class PreconditionFailed(SeqSatError, ValueError):
    pass


class NoFinitePPadding(SeqSatError):
    """The repetition count changed when the padding was enlarged."""


class BadParameters(SeqSatError, ValueError):
    pass


class BoundExceeded(SeqSatError):
    """No saturated sequence exists up to the requested length bound."""


class GridTooSmall(SeqSatError, ValueError):
    pass


class Infeasible(SeqSatError):
    """The integer program has no feasible point; usually N <= Sat(n, u)."""


class ResourceLimit(SeqSatError):
    def __init__(self, message, best=None, nodes=None):
        super().__init__(message)
        self.best = best
        self.nodes = nodes


class EngineDisagreement(SeqSatError):
    def __init__(self, message, search=None, ilp=None):
        super().__init__(message)
        self.search = search
        self.ilp = ilp
