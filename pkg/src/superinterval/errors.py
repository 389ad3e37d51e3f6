"""Exception hierarchy shared by every module."""


class SuperIntervalError(Exception):
    """Base class; the CLI maps these to exit code 1."""


class DomainMismatch(SuperIntervalError):
    pass


class DomainOverflow(SuperIntervalError):
    pass


class UnorderedDomain(SuperIntervalError):
    pass


class InvalidEndpoint(SuperIntervalError):
    pass


class ShapeMismatch(SuperIntervalError):
    pass


class TypeMismatch(SuperIntervalError):
    """Same natural order is not enough: cut sets must agree too."""


class NotConformable(SuperIntervalError):
    pass


class PartitionMismatch(SuperIntervalError):
    pass


class ParseError(SuperIntervalError):
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


class InconsistentCuts(ParseError):
    pass


class BadEndpoint(ParseError):
    pass


class CarrierEmpty(SuperIntervalError):
    pass


class BudgetExceeded(SuperIntervalError):
    pass


class GeneratorOutsideCarrier(SuperIntervalError):
    pass


class MapUndefined(SuperIntervalError):
    pass


class ScalarOutOfRange(SuperIntervalError):
    pass


class ImageEscape(SuperIntervalError):
    pass


class NoneFound(SuperIntervalError):
    """An exhaustive witness search finished without a witness."""

    def __init__(self, message: str, search=None):
        super().__init__(message)
        self.search = search
