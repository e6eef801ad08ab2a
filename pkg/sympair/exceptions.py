"""
Error hierarchy for sympair.

Every library error is a ValueError so callers that only know about bad
arguments keep working.
"""


class SympairError(ValueError):
    """Base class for all sympair errors"""


class DegreeMismatchError(SympairError):
    """Operands live on symmetric groups of different degree"""


class EnumerationBoundError(SympairError):
    """Requested n exceeds the configured enumeration bound"""


class InvalidPermutationError(SympairError):
    """Images do not form a rearrangement of 1..n"""


class InvalidPartitionError(SympairError):
    """Parts are not a weakly decreasing sequence of positive integers"""


class DomainError(SympairError):
    """Argument lies outside the domain of the operation"""


class NotBiinvariantError(SympairError):
    """Element is not constant on the double cosets of S_n in S_{n+1}"""


class FunctionFileError(SympairError):
    """Malformed function file; carries the 1-based line number"""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ReportRenderError(SympairError):
    """A report has no text template or its template failed to render"""
