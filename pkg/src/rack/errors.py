"""Exception hierarchy shared across the package."""


class RackError(Exception):
    """Base class for all errors raised by this package."""


class RackIOError(RackError):
    """An index, corpus, or report file could not be read or written."""


class FormatError(RackError):
    """A file was readable but its contents do not match the expected format."""


class IndexFormatError(FormatError):
    """An index directory is missing files, malformed, or has the wrong version."""


class IndexChecksumError(FormatError):
    """An index file does not match the checksum recorded in its metadata."""


class GoldSetError(FormatError):
    """A gold-set file is malformed or empty."""


class EmptyQueryError(RackError):
    """A query produced no keywords after preprocessing."""


class TaggerUnavailableError(RackError):
    """A configured part-of-speech tagger could not be used."""
