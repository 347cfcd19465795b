"""Exception types shared across the engine."""


class ArchexError(Exception):
    """Base class for every error raised by this package."""


class FormatError(ArchexError):
    """An input file violates its declared format (archive header, embedding file)."""


class ReferentialError(ArchexError):
    """An id in one input does not resolve against the archive."""


class InvalidFilterError(ArchexError):
    """A filter state violates its invariants (bad ranges, inconsistent geography)."""


class ExportError(ArchexError):
    """A static-export precondition failed (conflicting graphs, unsafe ids)."""
