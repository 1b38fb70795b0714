"""Crisp (all-or-nothing) matching baselines and click-point scheme utilities.

These are the classical comparison points for the fuzzy matcher: an inclusive
tolerance region per pixel (circle or square) with all-or-nothing gesture
acceptance, the theoretical password-space count for cued-click-point schemes,
and the bounding-box grid encoding of a drawn shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateBoxError, EmptySequenceError, LengthMismatchError
from .gestures import Gesture, TimedPoint, flatten

SHAPE_CIRCLE = "circle"
SHAPE_SQUARE = "square"
SHAPES = (SHAPE_CIRCLE, SHAPE_SQUARE)

# Half-side of the classic 20x20 tolerance square.
DEFAULT_TOLERANCE = 10.0


@dataclass(frozen=True)
class CrispParams:
    """Tolerance region around a reference pixel: radius (circle) or half-side (square)."""

    tolerance: float = DEFAULT_TOLERANCE
    shape: str = SHAPE_SQUARE

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        if self.shape not in SHAPES:
            raise ValueError(f"shape must be one of {SHAPES}, got {self.shape!r}")


@dataclass(frozen=True)
class GridSpec:
    """Grid laid over a gesture's bounding box; cells numbered row-major from 1, top-left."""

    rows: int
    cols: int

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"grid must be at least 1x1, got {self.rows}x{self.cols}")


def crisp_pixel_match(rp: TimedPoint, cp: TimedPoint, params: CrispParams) -> int:
    """1 if the candidate pixel lies inside the reference tolerance region, else 0.

    The boundary counts as inside: a point at exactly the tolerance distance
    matches.
    """
    dx = cp.x - rp.x
    dy = cp.y - rp.y
    if params.shape == SHAPE_CIRCLE:
        return 1 if math.hypot(dx, dy) <= params.tolerance else 0
    return 1 if max(abs(dx), abs(dy)) <= params.tolerance else 0


def crisp_gesture_match(ref: list[TimedPoint], cand: list[TimedPoint],
                        params: CrispParams) -> bool:
    """All-or-nothing gesture acceptance: every pixel pair must match."""
    if len(ref) != len(cand):
        raise LengthMismatchError(f"sequences differ in length: {len(ref)} vs {len(cand)}")
    if not ref:
        raise EmptySequenceError("cannot match empty point sequences")
    return all(crisp_pixel_match(rp, cp, params) for rp, cp in zip(ref, cand))


def password_space(w: int, h: int, t: int, c: int) -> int:
    """Theoretical password count for a cued-click-point scheme.

    The image of w*h pixels holds floor(w*h / t^2) distinguishable tolerance
    squares of side t; a password of c click points selects one per click, so
    the space is that count raised to the power c. Exact integer arithmetic.
    """
    if w <= 0 or h <= 0 or t <= 0:
        raise ValueError(f"image and tolerance dimensions must be > 0, got w={w} h={h} t={t}")
    if c < 0:
        raise ValueError(f"click count must be >= 0, got {c}")
    squares = (w * h) // (t * t)
    return squares ** c


def bounding_box(g: Gesture) -> tuple[tuple[float, float], tuple[float, float]]:
    """Top-left and bottom-right corners of the box containing every point."""
    pts = flatten(g)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return (min(xs), min(ys)), (max(xs), max(ys))


def grid_encode(g: Gesture, spec: GridSpec) -> list[int]:
    """Cells crossed by the gesture, in drawing order, consecutive repeats removed.

    The grid covers the gesture's own bounding box. The flattened polyline is
    walked at steps no longer than half the smaller cell dimension so no cell
    crossing is skipped. A point on an interior cell border belongs to the
    right/bottom neighbour; the box's max edges belong to the last row/column.

    A one-point gesture encodes as the single cell [1]. A gesture of two or
    more points whose box has zero width or height cannot carry a grid and
    raises DegenerateBoxError.
    """
    pts = flatten(g)
    if len(pts) == 1:
        return [1]
    (min_x, min_y), (max_x, max_y) = bounding_box(g)
    width = max_x - min_x
    height = max_y - min_y
    if width == 0 or height == 0:
        raise DegenerateBoxError(f"bounding box {width}x{height} cannot be divided into a grid")

    cell_w = width / spec.cols
    cell_h = height / spec.rows
    step = 0.5 * min(cell_w, cell_h)

    def cell_of(x: float, y: float) -> int:
        col = min(int(math.floor((x - min_x) / cell_w)), spec.cols - 1)
        row = min(int(math.floor((y - min_y) / cell_h)), spec.rows - 1)
        return row * spec.cols + col + 1

    cells: list[int] = []

    def emit(x: float, y: float) -> None:
        c = cell_of(x, y)
        if not cells or cells[-1] != c:
            cells.append(c)

    emit(pts[0].x, pts[0].y)
    for prev, cur in zip(pts, pts[1:]):
        length = math.hypot(cur.x - prev.x, cur.y - prev.y)
        substeps = max(1, math.ceil(length / step))
        for k in range(1, substeps + 1):
            alpha = k / substeps
            emit(prev.x + alpha * (cur.x - prev.x), prev.y + alpha * (cur.y - prev.y))
    return cells


def region_pixel_count(g: Gesture, spec: GridSpec) -> int:
    """Number of distinct grid cells the gesture passes through."""
    return len(set(grid_encode(g, spec)))
