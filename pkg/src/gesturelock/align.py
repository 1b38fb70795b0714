"""Global shift correction between a candidate drawing and its reference.

A redrawn gesture is often the right shape placed a little off; this cancels
one global vertical/horizontal offset before per-pixel scoring. The anchor is
the candidate's leading point closest to the reference's first point, and the
offset is clamped so that alignment cannot move a drawing arbitrarily far
(which would let any copy of the shape match from anywhere on the image).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EmptySequenceError
from .gestures import TimedPoint

DEFAULT_LEAD_WINDOW = 8
# Three support half-widths of the default membership shape.
DEFAULT_MAX_SHIFT = 60.0


@dataclass(frozen=True)
class AlignmentParams:
    """Leading-window size and the componentwise clamp on the correction."""

    lead_window: int = DEFAULT_LEAD_WINDOW
    max_shift: float = DEFAULT_MAX_SHIFT

    def __post_init__(self) -> None:
        if self.lead_window < 1:
            raise ValueError(f"lead_window must be >= 1, got {self.lead_window}")
        if self.max_shift < 0:
            raise ValueError(f"max_shift must be >= 0, got {self.max_shift}")


@dataclass(frozen=True)
class AlignmentResult:
    """Chosen offset (dx, dy) and the index of the anchoring candidate point."""

    offset: tuple[float, float]
    anchor_index: int


def find_shift(ref: list[TimedPoint], cand: list[TimedPoint],
               params: AlignmentParams) -> AlignmentResult:
    """Pick the correction that moves the candidate's best leading point onto ref[0].

    Scans the first min(lead_window, len(cand)) candidate points for the one
    nearest (Euclidean) to the reference's first point; ties go to the lowest
    index. The offset ref[0] - cand[anchor] is clamped componentwise to
    +/- max_shift.
    """
    if not ref or not cand:
        raise EmptySequenceError("alignment needs non-empty point sequences")
    window = cand[:min(params.lead_window, len(cand))]
    best_index = 0
    best_dist = math.inf
    for i, p in enumerate(window):
        d = math.hypot(ref[0].x - p.x, ref[0].y - p.y)
        if d < best_dist:
            best_dist = d
            best_index = i
    anchor = cand[best_index]
    m = params.max_shift
    dx = _clamp(ref[0].x - anchor.x, -m, m)
    dy = _clamp(ref[0].y - anchor.y, -m, m)
    return AlignmentResult(offset=(dx, dy), anchor_index=best_index)


def apply_shift(points: list[TimedPoint], offset: tuple[float, float]) -> list[TimedPoint]:
    """Translate every point by the offset; order, length and times unchanged."""
    dx, dy = offset
    return [TimedPoint(p.x + dx, p.y + dy, p.t) for p in points]


def _clamp(v: float, lo: float, hi: float) -> float:
    return max(lo, min(hi, v))


def alignment_params_to_dict(params: AlignmentParams) -> dict:
    return {"lead_window": params.lead_window, "max_shift": params.max_shift}


def alignment_params_from_dict(d: dict) -> AlignmentParams:
    try:
        return AlignmentParams(lead_window=int(d["lead_window"]),
                               max_shift=float(d["max_shift"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad alignment params: {exc}") from None
