"""Fuzzy matching of hand-drawn touch gestures, with a graphical-password service.

A drawn gesture is a sequence of timed points. Instead of the classical
all-or-nothing tolerance test, each candidate pixel gets a closeness degree in
[0, 1] per axis; the degrees are conjoined with a t-norm and averaged into a
gesture-level matching score compared against a per-user acceptance threshold.
The package also ships the crisp baselines (tolerance circle/square,
bounding-box grid encoding, password-space count), a global shift correction,
a seeded jitter benchmark, a file-backed profile store, and an HTTP service.
"""

from .align import AlignmentParams, AlignmentResult, apply_shift, find_shift
from .bench import BenchReport, JitterModel, perturb, run_benchmark
from .crisp import (
    CrispParams,
    GridSpec,
    bounding_box,
    crisp_gesture_match,
    crisp_pixel_match,
    grid_encode,
    password_space,
    region_pixel_count,
)
from .errors import (
    DegenerateBoxError,
    DuplicateUsernameError,
    EmptyGestureError,
    EmptySequenceError,
    GestureLockError,
    InvalidGestureError,
    InvalidThresholdError,
    LengthMismatchError,
    NonMonotoneTimeError,
    OutOfBoundsError,
    StorageFailureError,
    TooFewPointsError,
    UnknownUserError,
    ZeroDimensionError,
)
from .gestures import (
    DEFAULT_RESAMPLE_COUNT,
    Gesture,
    TimedPoint,
    flatten,
    gesture_from_dict,
    gesture_to_dict,
    rescale,
    resample,
    single_stroke,
    translate,
    validate_gesture,
)
from .matching import (
    MatchConfig,
    MatchResult,
    match_config_from_dict,
    match_config_to_dict,
    match_gestures,
    match_gestures_crisp,
)
from .membership import (
    MembershipParams,
    PixelMatch,
    axis_degree,
    mean_degree,
    percent_display,
    pixel_degree,
)
from .service import ServiceConfig, create_app, create_app_from_config, load_service_config
from .store import LoginAttempt, ProfileStore, UserProfile

__version__ = "0.1.0"

__all__ = [
    "AlignmentParams", "AlignmentResult", "apply_shift", "find_shift",
    "BenchReport", "JitterModel", "perturb", "run_benchmark",
    "CrispParams", "GridSpec", "bounding_box", "crisp_gesture_match",
    "crisp_pixel_match", "grid_encode", "password_space", "region_pixel_count",
    "DegenerateBoxError", "DuplicateUsernameError", "EmptyGestureError",
    "EmptySequenceError", "GestureLockError", "InvalidGestureError",
    "InvalidThresholdError", "LengthMismatchError", "NonMonotoneTimeError",
    "OutOfBoundsError", "StorageFailureError", "TooFewPointsError",
    "UnknownUserError", "ZeroDimensionError",
    "DEFAULT_RESAMPLE_COUNT", "Gesture", "TimedPoint", "flatten",
    "gesture_from_dict", "gesture_to_dict", "rescale", "resample",
    "single_stroke", "translate", "validate_gesture",
    "MatchConfig", "MatchResult", "match_config_from_dict",
    "match_config_to_dict", "match_gestures", "match_gestures_crisp",
    "MembershipParams", "PixelMatch", "axis_degree", "mean_degree",
    "percent_display", "pixel_degree",
    "ServiceConfig", "create_app", "create_app_from_config", "load_service_config",
    "LoginAttempt", "ProfileStore", "UserProfile",
]
