"""Exception types shared across the package.

Each error carries the exit code the command line tool maps it to, so the
CLI and the HTTP service stay in sync about error classes.
"""


class VoganError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class InvalidParams(VoganError):
    """Family parameters outside the catalog's validity domain, or malformed input."""

    exit_code = 2


class InvalidCircling(VoganError):
    """A circling referencing unknown vertices or circling an odd vertex."""

    exit_code = 2


class DimensionMismatch(VoganError):
    """Realization and diagram disagree on the number of vertices."""

    exit_code = 2


class UnknownVertex(VoganError):
    """A press named a vertex that is not in the diagram."""

    exit_code = 3


class NotPressable(VoganError):
    """A press at a vertex that is odd or not currently circled."""

    exit_code = 3


class NotAdmissible(VoganError):
    """An operation that requires admissible circlings received one that is not."""

    exit_code = 4


class CapExceeded(VoganError):
    """Enumeration would exceed the configured circling cap."""

    exit_code = 5


class ZeroNorm(VoganError):
    """A pressable vertex with vanishing self-pairing; signals corrupt catalog data."""

    exit_code = 2
