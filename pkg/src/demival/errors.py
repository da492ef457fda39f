"""Exception hierarchy. Every error carries a short machine-readable code."""


class DemivalError(Exception):
    code = "domain_error"

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        if code is not None:
            self.code = code


class FactorizationBoundError(DemivalError):
    code = "factor_bound"


class DegreeBoundError(DemivalError):
    code = "degree_bound"


class InvalidCertificate(DemivalError):
    code = "invalid_certificate"


class ZeroIdealError(DemivalError):
    code = "zero_ideal"


class ParseError(DemivalError):
    code = "parse_error"

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column
