"""Exception hierarchy shared by the whole package."""


class CsalgError(Exception):
    """Base class for every error raised by this package."""


class ParseError(CsalgError):
    """Syntax or validation error in a .csa/.csm source file.

    Carries the 1-based line and column of the offending token so the
    CLI can point at it.
    """

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = "line %d, col %d: %s" % (line, col, message)
        super().__init__(message)


class DomainError(CsalgError):
    """A value is outside the mathematical domain of an operation.

    Examples: inverting a non-unit Laurent element, a morphism without
    finite order under the given bound, a matrix with non-unit
    determinant.
    """


class ConductorError(DomainError):
    """A root of unity was requested that the fixed conductor cannot host."""


class TableInconsistencyError(CsalgError):
    """A bracket table contradicts the skew-symmetry axiom.

    Raised during table completion when both orientations of a
    generator pair are present but do not determine each other.
    """

    def __init__(self, pair, n, message=None):
        self.pair = pair
        self.n = n
        if message is None:
            message = "table entry (%s, %s) inconsistent at n=%d" % (
                pair[0], pair[1], n)
        super().__init__(message)
