"""Domain error hierarchy.

Every condition that aborts an analysis maps to one named exception so the
CLI can report the condition verbatim and exit with a stable code.
"""


class DomainError(Exception):
    """Base class for all analysis-level failures (CLI exit code 3)."""


class OverlapTooSmall(DomainError):
    """Pre/post-selection overlap below the floor; weak value would diverge."""


class GridTooNarrow(DomainError):
    """Grid does not contain the pointer state; truncated mass too large."""


class WraparoundRisk(DomainError):
    """A translation would push significant amplitude across the periodic boundary."""


class DegenerateNorm(DomainError):
    """Complete destructive interference: the combined pointer state has ~zero norm."""


class ResourceLimit(DomainError):
    """Joint system-pointer state exceeds the configured size cap."""


class InterferenceTooLarge(DomainError):
    """Peak-ratio readout requested where the two-peak approximation is invalid."""


class PeakNotFound(DomainError):
    """No probability peak on one side of the split point."""


class PostSelectionDark(DomainError):
    """The chosen output port carries no amplitude; post-selection impossible."""
