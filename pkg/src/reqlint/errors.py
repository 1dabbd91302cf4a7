"""Exception types shared across the package."""


class ReqlintError(Exception):
    """Base class for every error raised by this package."""


class EmptyText(ReqlintError):
    """Raised when an operation needs non-blank text."""


class InvalidCounts(ReqlintError):
    """Raised when word/smell counts violate the scoring model's domain."""


class UnknownDomainCode(ReqlintError):
    """Raised for a domain code with no registered dissimilarity."""


class DegenerateRange(ReqlintError):
    """Raised when min-max normalization gets a constant value range."""


class FormatError(ReqlintError):
    """Raised for malformed data files; carries a line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateKey(FormatError):
    """Raised when a lexicon file repeats a term key."""


class UnknownSmellCode(FormatError):
    """Raised for a smell code outside the dictionary-detected set."""


class WeightsFormatError(ReqlintError):
    """Raised when a tagger weights file fails magic or version checks."""


class CorpusTooSmall(ReqlintError):
    """Raised when a training corpus has too few tokens for the model size."""


class CategoryNotFound(ReqlintError):
    """Raised when a wiki category does not exist on the endpoint."""


class CrawlError(ReqlintError):
    """Raised for unrecoverable HTTP failures during crawling."""


class TooFewSamples(ReqlintError):
    """Raised when a statistic needs more samples than were supplied."""


class MissingColumn(ReqlintError):
    """Raised when a dataset file lacks a required column."""


class RowError(ReqlintError):
    """A single bad dataset row; carries the row number."""

    def __init__(self, message, row):
        super().__init__(f"row {row}: {message}")
        self.row = row


class UnknownProject(ReqlintError):
    """Raised for operations against a project id that does not exist."""


class UnknownRequirement(ReqlintError):
    """Raised for operations against a requirement id that does not exist."""


class InvalidTerm(ReqlintError):
    """Raised when a manual label term does not occur in the text."""
