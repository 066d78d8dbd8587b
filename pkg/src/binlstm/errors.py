"""Exception hierarchy.

Every error raised by this package derives from :class:`BinLstmError`,
split into four families so callers (and the CLI exit-code mapping) can
tell apart bad inputs, bad configuration, numeric failures, and broken
files.
"""


class BinLstmError(Exception):
    """Base class for all errors raised by binlstm."""


class ValidationError(BinLstmError, ValueError):
    """Input data violates a precondition (non-finite values, bad labels...)."""


class DimensionError(ValidationError):
    """Shapes or lengths of operands do not conform."""


class ConfigError(BinLstmError, ValueError):
    """A scaling/exploration/cost configuration is out of range or malformed."""


class NumericError(BinLstmError, ArithmeticError):
    """A numeric guarantee cannot be honored (overflow of an exactness window)."""


class ConditioningError(NumericError):
    """A linear solve is too ill-conditioned to trust."""


class FormatError(BinLstmError, IOError):
    """A model/dataset file is structurally invalid."""


class BadMagicError(FormatError):
    """File does not start with the expected magic bytes."""


class VersionError(FormatError):
    """File carries an unsupported format version."""


class TruncatedError(FormatError):
    """File ends before the declared payload is complete."""


class SizeMismatchError(FormatError):
    """Declared and actual payload sizes disagree."""
