"""Exception types raised across the package."""


class GestureLockError(Exception):
    """Base class for all gesturelock errors."""


# --- gesture data errors ---------------------------------------------------

class EmptyGestureError(GestureLockError):
    """Gesture has no strokes, or a stroke has no points."""


class OutOfBoundsError(GestureLockError):
    """A point lies outside the gesture's canvas."""


class NonMonotoneTimeError(GestureLockError):
    """A stroke's timestamps decrease or start negative."""


class ZeroDimensionError(GestureLockError):
    """A canvas dimension is zero or negative where positive is required."""


class TooFewPointsError(GestureLockError):
    """Resampling needs at least two points in the flattened sequence."""


# --- scoring errors ---------------------------------------------------------

class EmptySequenceError(GestureLockError):
    """An aggregate over an empty sequence was requested."""


class LengthMismatchError(GestureLockError):
    """Point sequences being paired index-wise have different lengths."""


class DegenerateBoxError(GestureLockError):
    """A bounding box has zero width or height and cannot carry a grid."""


# --- account store errors ---------------------------------------------------

class DuplicateUsernameError(GestureLockError):
    """An account with this username already exists."""


class UnknownUserError(GestureLockError):
    """No account with this username."""


class InvalidThresholdError(GestureLockError):
    """Acceptance threshold outside [0, 1]."""


class InvalidGestureError(GestureLockError):
    """Gesture payload failed validation at the service boundary."""


class StorageFailureError(GestureLockError):
    """The profile store could not complete a write."""
