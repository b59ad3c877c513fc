"""Exception hierarchy.

Every error raised by the library derives from :class:`PolytopeError`.  The
``exit_code`` class attribute is what the command line front end returns when
the error escapes a command.
"""


class PolytopeError(ValueError):
    exit_code = 4


class ParseError(PolytopeError):
    exit_code = 2

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


class NotFullDimensional(PolytopeError):
    exit_code = 3


class WrongDimension(PolytopeError):
    exit_code = 3


class ZeroVector(PolytopeError):
    pass


class NotPrimitive(PolytopeError):
    pass


class OriginNotInterior(PolytopeError):
    pass


class NotFano(PolytopeError):
    pass


class NotReflexive(PolytopeError):
    pass


class NotCanonical(PolytopeError):
    pass


class NotCentrallySymmetric(PolytopeError):
    pass


class NotSimplicial(PolytopeError):
    pass


class NotSimplexFacet(PolytopeError):
    pass


class NotOnBoundary(PolytopeError):
    pass


NotBoundary = NotOnBoundary


class NotVertex(PolytopeError):
    pass


class WrongClass(PolytopeError):
    pass


class UnknownName(PolytopeError):
    exit_code = 5
