"""Exception types shared across the package."""


class MapParseError(ValueError):
    """Raised for malformed map or voxel files; carries the offending line."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class DegenerateObstacleError(ValueError):
    """Raised when an obstacle polygon has no area (collinear or < 3 points)."""


class OutOfBoundsError(ValueError):
    """Raised when an obstacle polygon extends beyond the grid region."""


class InvalidEndpointError(ValueError):
    """Raised when a route endpoint sits inside an obstacle or off the lattice."""


class NoPathError(RuntimeError):
    """Raised when the destination is unreachable.

    ``leg`` is set when a multi-stop journey fails, identifying the leg index.
    """

    def __init__(self, message: str, leg: int | None = None):
        super().__init__(message)
        self.leg = leg
