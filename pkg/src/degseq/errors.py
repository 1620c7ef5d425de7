"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so keep the hierarchy flat
and the meanings narrow.
"""


class DegseqError(Exception):
    """Base class for package-specific failures."""


class MemoryBudgetError(DegseqError):
    """A table build was refused because its estimated footprint exceeds the cap."""

    def __init__(self, estimated_bytes: int, cap_bytes: int):
        self.estimated_bytes = estimated_bytes
        self.cap_bytes = cap_bytes
        super().__init__(
            f"table would need about {estimated_bytes} bytes "
            f"but the memory cap is {cap_bytes} bytes"
        )


class LayerNotResidentError(DegseqError):
    """A query asked for a layer that the rolling fill no longer holds."""


class MissingPriorError(DegseqError):
    """A computation needs earlier series values that were not supplied."""


class OracleCapError(DegseqError):
    """A brute-force enumeration was requested beyond the configured cap."""
