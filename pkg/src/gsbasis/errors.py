"""Exception hierarchy shared by every module of the package."""


class GSBasisError(Exception):
    """Base class for all errors raised by gsbasis."""


class InvalidWordError(GSBasisError, ValueError):
    pass


class EmptyPolynomialError(GSBasisError, ValueError):
    pass


class InconsistentPresentationError(GSBasisError):
    """The ideal contains a nonzero constant, so the quotient algebra is zero."""


class DegenerateRuleError(GSBasisError, ValueError):
    pass


class NonStandardWordError(GSBasisError, ValueError):
    pass


class InfiniteLanguageError(GSBasisError):
    """A finite set of standard monomials was required but the language is infinite."""


class FactorizationError(GSBasisError):
    pass


class UnsupportedBondError(GSBasisError, ValueError):
    pass


class PossiblyInfiniteGroupError(GSBasisError):
    pass


class ParseError(GSBasisError, ValueError):
    """Malformed text input. ``line`` and ``column`` are 1-based when known."""

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
