"""End-to-end gesture scoring: rescale, align, resample, score, decide.

The fuzzy pipeline produces a matching degree in [0, 1] (the mean of per-pixel
closeness degrees) and an accept/reject verdict against an inclusive
threshold. The crisp pipeline shares the rescale/resample steps but keeps the
classical all-or-nothing rule and applies no shift correction.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .align import (
    AlignmentParams,
    alignment_params_from_dict,
    alignment_params_to_dict,
    apply_shift,
    find_shift,
)
from .crisp import CrispParams, crisp_gesture_match
from .gestures import (
    DEFAULT_RESAMPLE_COUNT,
    Gesture,
    flatten,
    rescale,
    resample,
    translate,
    validate_gesture,
)
from .membership import (
    MembershipParams,
    PixelMatch,
    mean_degree,
    membership_params_from_dict,
    membership_params_to_dict,
    pixel_degree,
)

DEFAULT_THRESHOLD = 0.8


@dataclass(frozen=True)
class MatchConfig:
    """Everything the scoring pipeline needs besides the two gestures."""

    membership: MembershipParams = field(default_factory=MembershipParams)
    alignment: AlignmentParams = field(default_factory=AlignmentParams)
    resample_n: int = DEFAULT_RESAMPLE_COUNT
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self) -> None:
        if self.resample_n < 2:
            raise ValueError(f"resample_n must be >= 2, got {self.resample_n}")
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold must be in [0, 1], got {self.threshold}")

    def with_threshold(self, threshold: float) -> "MatchConfig":
        return replace(self, threshold=threshold)


@dataclass(frozen=True)
class MatchResult:
    """Outcome of one comparison: score, per-pixel detail, shift used, verdict."""

    degree: float
    per_pixel: list[PixelMatch]
    offset: tuple[float, float]
    accepted: bool

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "accepted": self.accepted,
            "offset": {"dx": self.offset[0], "dy": self.offset[1]},
            "per_pixel": [p.degree for p in self.per_pixel],
        }


def match_gestures(reference: Gesture, candidate: Gesture, config: MatchConfig) -> MatchResult:
    """Score a candidate drawing against a stored reference.

    Steps: bring the candidate onto the reference canvas, cancel a global
    shift found from the raw leading points, resample both to the same count,
    score each pixel pair with the two-dimensional membership, average, and
    accept when the mean degree reaches the threshold (inclusive).
    """
    validate_gesture(reference)
    validate_gesture(candidate)
    candidate = rescale(candidate, reference.canvas_width, reference.canvas_height)

    shift = find_shift(flatten(reference), flatten(candidate), config.alignment)
    shifted = translate(candidate, *shift.offset)

    ref_pts = flatten(resample(reference, config.resample_n))
    cand_pts = flatten(resample(shifted, config.resample_n))

    per_pixel = [pixel_degree(rp, cp, config.membership) for rp, cp in zip(ref_pts, cand_pts)]
    degree = mean_degree([p.degree for p in per_pixel])
    return MatchResult(degree=degree, per_pixel=per_pixel, offset=shift.offset,
                       accepted=degree >= config.threshold)


def match_gestures_crisp(reference: Gesture, candidate: Gesture, params: CrispParams,
                         resample_n: int = DEFAULT_RESAMPLE_COUNT) -> bool:
    """Classical baseline verdict: every resampled pixel pair inside tolerance.

    Same rescale/resample preparation as the fuzzy pipeline but no shift
    correction; the baselines being compared against have none.
    """
    validate_gesture(reference)
    validate_gesture(candidate)
    candidate = rescale(candidate, reference.canvas_width, reference.canvas_height)
    ref_pts = flatten(resample(reference, resample_n))
    cand_pts = flatten(resample(candidate, resample_n))
    return crisp_gesture_match(ref_pts, cand_pts, params)


def match_config_to_dict(config: MatchConfig) -> dict:
    return {
        "membership": membership_params_to_dict(config.membership),
        "alignment": alignment_params_to_dict(config.alignment),
        "resample_n": config.resample_n,
        "threshold": config.threshold,
    }


def match_config_from_dict(d: dict) -> MatchConfig:
    if not isinstance(d, dict):
        raise ValueError("match config must be a JSON object")
    try:
        return MatchConfig(
            membership=membership_params_from_dict(d["membership"]),
            alignment=alignment_params_from_dict(d["alignment"]),
            resample_n=int(d["resample_n"]),
            threshold=float(d["threshold"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad match config: {exc}") from None
