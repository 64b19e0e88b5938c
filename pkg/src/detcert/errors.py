"""Exception hierarchy shared by every detcert module."""


class DetcertError(Exception):
    pass


class SingularMatrix(DetcertError):
    pass


class DegenerateSimplex(SingularMatrix):
    """The node matrix has zero determinant, so the simplex has no volume."""


class DimensionMismatch(DetcertError, ValueError):
    pass


class InternalError(DetcertError):
    """A mathematically impossible state was reached (bug or invalid input)."""


class OrderTooLarge(DetcertError):
    pass


class ParseError(DetcertError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class NonSquare(ParseError):
    pass


class BadSymbol(ParseError):
    pass
