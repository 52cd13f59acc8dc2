"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised on malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        return f"{self.message} (at position {self.position})"


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed a configured resource cap."""


class StructureFormatError(ValueError):
    """Raised when a finite-structure file is malformed or incomplete."""
