"""Gesture data types, validation, coordinate scaling, and arc-length resampling.

A gesture is one or more strokes; a stroke is an ordered run of timed points
captured between pointer-down and pointer-up. All matching downstream works on
the flattened point sequence (strokes concatenated in drawing order), so the
helpers here are what make index-wise pixel pairing well-defined.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyGestureError,
    NonMonotoneTimeError,
    OutOfBoundsError,
    TooFewPointsError,
    ZeroDimensionError,
)

DEFAULT_RESAMPLE_COUNT = 64


@dataclass(frozen=True)
class TimedPoint:
    """One sampled pixel of a stroke.

    ``x`` and ``y`` are pixel coordinates (origin top-left, y grows downward);
    ``t`` is milliseconds since the start of the stroke that contains the point.
    """

    x: float
    y: float
    t: float = 0.0


@dataclass
class Gesture:
    """An ordered sequence of strokes drawn over an image plane."""

    strokes: list[list[TimedPoint]]
    canvas_width: int
    canvas_height: int


def single_stroke(points: list[tuple[float, float]] | list[TimedPoint],
                  canvas_width: int, canvas_height: int) -> Gesture:
    """Build a one-stroke gesture from bare ``(x, y)`` pairs or TimedPoints."""
    stroke = [p if isinstance(p, TimedPoint) else TimedPoint(float(p[0]), float(p[1]), float(i))
              for i, p in enumerate(points)]
    return Gesture(strokes=[stroke], canvas_width=canvas_width, canvas_height=canvas_height)


def validate_gesture(g: Gesture) -> None:
    """Raise if any gesture invariant is violated.

    Checks: at least one stroke, every stroke non-empty, every point inside
    the canvas (borders inclusive), timestamps non-negative and non-decreasing
    within each stroke.
    """
    if not g.strokes or any(len(stroke) == 0 for stroke in g.strokes):
        raise EmptyGestureError("gesture must contain at least one stroke with at least one point")
    for stroke in g.strokes:
        prev_t = None
        for p in stroke:
            if not (0 <= p.x <= g.canvas_width and 0 <= p.y <= g.canvas_height):
                raise OutOfBoundsError(
                    f"point ({p.x}, {p.y}) outside {g.canvas_width}x{g.canvas_height} canvas")
            if p.t < 0 or (prev_t is not None and p.t < prev_t):
                raise NonMonotoneTimeError(f"stroke timestamps must be non-decreasing, got t={p.t}")
            prev_t = p.t


def flatten(g: Gesture) -> list[TimedPoint]:
    """Concatenate strokes in drawing order into the canonical point sequence."""
    return [p for stroke in g.strokes for p in stroke]


def rescale(g: Gesture, target_width: int, target_height: int) -> Gesture:
    """Map the gesture onto a canvas of the given dimensions.

    Coordinates scale proportionally per axis; timestamps are unchanged.
    Identical target dimensions return an unchanged copy (scale factor 1.0).
    """
    if target_width <= 0 or target_height <= 0:
        raise ZeroDimensionError(f"target canvas {target_width}x{target_height} must be positive")
    if g.canvas_width <= 0 or g.canvas_height <= 0:
        raise ZeroDimensionError(f"source canvas {g.canvas_width}x{g.canvas_height} must be positive")
    sx = target_width / g.canvas_width
    sy = target_height / g.canvas_height
    strokes = [[TimedPoint(p.x * sx, p.y * sy, p.t) for p in stroke] for stroke in g.strokes]
    return Gesture(strokes=strokes, canvas_width=target_width, canvas_height=target_height)


def translate(g: Gesture, dx: float, dy: float) -> Gesture:
    """Shift every point by ``(dx, dy)``; stroke structure and times unchanged."""
    strokes = [[TimedPoint(p.x + dx, p.y + dy, p.t) for p in stroke] for stroke in g.strokes]
    return Gesture(strokes=strokes, canvas_width=g.canvas_width, canvas_height=g.canvas_height)


def resample(g: Gesture, n: int = DEFAULT_RESAMPLE_COUNT) -> Gesture:
    """Redistribute the gesture into exactly ``n`` points at equal arc-length steps.

    The flattened polyline is walked once; output points sit at arc distances
    k * L / (n - 1). The first and last original points are preserved exactly.
    Output is always a single stroke. Timestamps are interpolated linearly
    along the arc; for multi-stroke input the per-stroke clocks are first
    chained into one non-decreasing timeline.
    """
    if n < 2:
        raise ValueError(f"resample count must be >= 2, got {n}")
    pts = flatten(g)
    if len(pts) < 2:
        raise TooFewPointsError("resampling needs at least two captured points")

    xy = np.array([(p.x, p.y) for p in pts], dtype=float)
    ts = _chained_times(g)
    seg = np.linalg.norm(np.diff(xy, axis=0), axis=1)
    cum = np.concatenate(([0.0], np.cumsum(seg)))
    total = float(cum[-1])

    first, last = pts[0], pts[-1]
    if total == 0.0:
        # Every captured point coincides; spread timestamps, keep the position.
        times = np.linspace(first.t, float(ts[-1]), n)
        stroke = [TimedPoint(first.x, first.y, float(t)) for t in times]
    else:
        targets = np.linspace(0.0, total, n)
        xs = np.interp(targets, cum, xy[:, 0])
        ys = np.interp(targets, cum, xy[:, 1])
        tt = np.interp(targets, cum, ts)
        stroke = [TimedPoint(float(x), float(y), float(t)) for x, y, t in zip(xs, ys, tt)]
    stroke[0] = TimedPoint(first.x, first.y, first.t)
    stroke[-1] = TimedPoint(last.x, last.y, float(ts[-1]))
    return Gesture(strokes=[stroke], canvas_width=g.canvas_width, canvas_height=g.canvas_height)


def _chained_times(g: Gesture) -> np.ndarray:
    """Flattened timestamps with each stroke's clock offset past the previous one."""
    out: list[float] = []
    offset = 0.0
    for stroke in g.strokes:
        for p in stroke:
            out.append(offset + p.t)
        offset = out[-1]
    return np.array(out, dtype=float)


def gesture_to_dict(g: Gesture) -> dict:
    """Serialize to the wire format: canvas dims plus per-stroke x/y/t records."""
    return {
        "canvas_width": g.canvas_width,
        "canvas_height": g.canvas_height,
        "strokes": [[{"x": p.x, "y": p.y, "t": p.t} for p in stroke] for stroke in g.strokes],
    }


def gesture_from_dict(d: dict) -> Gesture:
    """Parse the wire format; raises ValueError on structural problems."""
    if not isinstance(d, dict):
        raise ValueError("gesture must be a JSON object")
    try:
        width = d["canvas_width"]
        height = d["canvas_height"]
        strokes = d["strokes"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"gesture is missing field: {exc}") from None
    if not isinstance(width, int) or not isinstance(height, int) or isinstance(width, bool) or isinstance(height, bool):
        raise ValueError("canvas dimensions must be integers")
    if not isinstance(strokes, list):
        raise ValueError("strokes must be a list of strokes")
    parsed: list[list[TimedPoint]] = []
    for stroke in strokes:
        if not isinstance(stroke, list):
            raise ValueError("each stroke must be a list of points")
        pts = []
        for p in stroke:
            if not isinstance(p, dict):
                raise ValueError("each point must be an object with x, y, t")
            try:
                x, y, t = p["x"], p["y"], p["t"]
            except KeyError as exc:
                raise ValueError(f"point is missing field: {exc}") from None
            for v in (x, y, t):
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise ValueError("point coordinates must be numbers")
            pts.append(TimedPoint(float(x), float(y), float(t)))
        parsed.append(pts)
    return Gesture(strokes=parsed, canvas_width=width, canvas_height=height)
