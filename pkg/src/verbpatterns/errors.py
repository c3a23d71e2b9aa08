"""Exception types shared across the package."""


class VerbPatternsError(Exception):
    """Base class for all package-specific errors."""


class LoadError(VerbPatternsError):
    """A data file could not be parsed; names the offending line."""

    def __init__(self, source: str, line_no: int, message: str):
        super().__init__(f"{source}, line {line_no}: {message}")
        self.source = source
        self.line_no = line_no


class UnknownVerbError(VerbPatternsError):
    """The requested verb is not present in the corpus."""


class ConsistencyError(VerbPatternsError):
    """Cross-referenced inputs disagree (assignment vs. distribution, gold vs. test set)."""


class InvalidAssignmentError(VerbPatternsError):
    """An assignment breaks the pattern constraints, e.g. a zero taxonomy conditional."""


class InstanceTooLargeError(VerbPatternsError):
    """Exhaustive enumeration refused: the assignment space exceeds the guard."""
