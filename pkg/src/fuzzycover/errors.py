"""Error taxonomy shared by the library and the CLI.

Every error carries a stable machine-readable ``code`` so the CLI can emit
it verbatim and scripts can match on it without parsing prose.
"""

from __future__ import annotations


class FuzzyCoverError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "ERROR"

    def __init__(self, message: str, *, path: str | None = None):
        # path is a dotted/indexed location inside an input document, when known
        self.path = path
        if path:
            message = f"{message} (at {path})"
        super().__init__(message)


class GradeOffGrid(FuzzyCoverError):
    code = "GRADE_OFF_GRID"


class LengthMismatch(FuzzyCoverError):
    code = "LENGTH_MISMATCH"


class UniverseMismatch(FuzzyCoverError):
    code = "UNIVERSE_MISMATCH"


class UnknownElement(FuzzyCoverError):
    code = "UNKNOWN_ELEMENT"


class NullMember(FuzzyCoverError):
    code = "NULL_MEMBER"


class CoverageGap(FuzzyCoverError):
    code = "COVERAGE_GAP"


class EmptyFamily(FuzzyCoverError):
    code = "EMPTY_FAMILY"


class MemberIndexError(FuzzyCoverError, IndexError):
    code = "INDEX_OUT_OF_RANGE"


class SizeGuard(FuzzyCoverError):
    code = "SIZE_GUARD"


class NotCovered(FuzzyCoverError):
    code = "NOT_COVERED"


class DegenerateCut(FuzzyCoverError):
    code = "DEGENERATE_CUT"


class NotSurjective(FuzzyCoverError):
    code = "NOT_SURJECTIVE"


class DuplicateName(FuzzyCoverError):
    code = "DUPLICATE_NAME"


class UnknownName(FuzzyCoverError):
    code = "UNKNOWN_NAME"


class LastCovering(FuzzyCoverError):
    code = "LAST_COVERING"


class EmptySubset(FuzzyCoverError):
    code = "EMPTY_SUBSET"


class GridOverflow(FuzzyCoverError):
    code = "GRID_OVERFLOW"


class ParseError(FuzzyCoverError):
    code = "PARSE_ERROR"


class InternalInconsistency(FuzzyCoverError):
    code = "INTERNAL_INCONSISTENCY"
