"""Fuzzy closeness of pixels: per-axis membership, two-axis combination, averaging.

The per-axis shape is a symmetric trapezoid over coordinate distance d:
full membership for d <= core_halfwidth, a linear ramp down to zero at
support_halfwidth, and zero beyond. With core_halfwidth = 0 it degenerates
to a triangle. The two axis degrees are combined with a t-norm (minimum by
default, product as an alternative), and a gesture-level score is the plain
arithmetic mean of per-pixel degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptySequenceError
from .gestures import TimedPoint

TNORM_MINIMUM = "minimum"
TNORM_PRODUCT = "product"
TNORMS = (TNORM_MINIMUM, TNORM_PRODUCT)


@dataclass(frozen=True)
class MembershipParams:
    """Shape of the per-axis closeness function plus the axis-combination t-norm.

    Defaults (core 0, support 20) make the zero-membership edge coincide with
    the 20-pixel tolerance used by classic click-point schemes, which keeps
    fuzzy and crisp runs comparable.
    """

    core_halfwidth: float = 0.0
    support_halfwidth: float = 20.0
    tnorm: str = TNORM_MINIMUM

    def __post_init__(self) -> None:
        if self.core_halfwidth < 0:
            raise ValueError(f"core_halfwidth must be >= 0, got {self.core_halfwidth}")
        if self.support_halfwidth <= self.core_halfwidth:
            raise ValueError(
                f"support_halfwidth ({self.support_halfwidth}) must exceed "
                f"core_halfwidth ({self.core_halfwidth})")
        if self.tnorm not in TNORMS:
            raise ValueError(f"tnorm must be one of {TNORMS}, got {self.tnorm!r}")


@dataclass(frozen=True)
class PixelMatch:
    """Degree of one pixel pair: the combined value and the two axis values."""

    degree: float
    axis_degrees: tuple[float, float]


def axis_degree(ref_coord: float, cand_coord: float, params: MembershipParams) -> float:
    """Closeness of two coordinates along one axis, in [0, 1].

    Piecewise linear in the distance d = |ref - cand|: 1 inside the core,
    (support - d) / (support - core) on the ramp, 0 at and beyond the support.
    """
    d = abs(ref_coord - cand_coord)
    a, b = params.core_halfwidth, params.support_halfwidth
    if d <= a:
        return 1.0
    if d < b:
        return (b - d) / (b - a)
    return 0.0


def combine(u: float, v: float, tnorm: str) -> float:
    """Apply the configured t-norm to two degrees."""
    if tnorm == TNORM_MINIMUM:
        return min(u, v)
    if tnorm == TNORM_PRODUCT:
        return u * v
    raise ValueError(f"unknown tnorm {tnorm!r}")


def pixel_degree(rp: TimedPoint, cp: TimedPoint, params: MembershipParams) -> PixelMatch:
    """Two-dimensional closeness of a candidate pixel to a reference pixel.

    Each axis is scored independently and the two degrees are conjoined with
    the t-norm. Timestamps play no part.
    """
    dx = axis_degree(rp.x, cp.x, params)
    dy = axis_degree(rp.y, cp.y, params)
    return PixelMatch(degree=combine(dx, dy, params.tnorm), axis_degrees=(dx, dy))


def mean_degree(degrees: Sequence[float] | Iterable[float]) -> float:
    """Arithmetic mean of per-pixel degrees; the gesture-level score."""
    values = list(degrees)
    if not values:
        raise EmptySequenceError("cannot average an empty sequence of degrees")
    return math.fsum(values) / len(values)


def percent_display(degree: float) -> int:
    """Whole percent for display, rounded half-up (0.745 -> 75)."""
    return int(math.floor(degree * 100.0 + 0.5))


def membership_params_to_dict(params: MembershipParams) -> dict:
    return {
        "core_halfwidth": params.core_halfwidth,
        "support_halfwidth": params.support_halfwidth,
        "tnorm": params.tnorm,
    }


def membership_params_from_dict(d: dict) -> MembershipParams:
    try:
        return MembershipParams(
            core_halfwidth=float(d["core_halfwidth"]),
            support_halfwidth=float(d["support_halfwidth"]),
            tnorm=str(d["tnorm"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"bad membership params: {exc}") from None
