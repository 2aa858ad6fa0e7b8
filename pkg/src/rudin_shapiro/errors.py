"""Exception types raised across the package."""


class RudinShapiroError(Exception):
    """Base class for all package errors."""


class LevelTooLargeError(RudinShapiroError, ValueError):
    def __init__(self, k, cap):
        super().__init__(f"level k={k} exceeds the cap {cap}")
        self.k = k
        self.cap = cap


class GridTooLargeError(RudinShapiroError, ValueError):
    pass


class GridTooSmallError(RudinShapiroError, ValueError):
    pass


class ArcTooShortError(RudinShapiroError, ValueError):
    pass


class IdentityViolation(RudinShapiroError):
    """A coefficient identity failed; ``index`` is the first offending position."""

    def __init__(self, message, index):
        super().__init__(message)
        self.index = index


class NonConvergenceError(RudinShapiroError, RuntimeError):
    pass
