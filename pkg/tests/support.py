"""Shared test helpers: independent oracles and input generators.

The oracles here deliberately avoid the library's own code paths: membership
is evaluated by piecewise-linear interpolation over a dense distance grid,
resampling by the classic insertion walk along the polyline, and grid
encoding by much finer brute-force sampling. Tests compare library output
against these.
"""

from __future__ import annotations

import math

import numpy as np

from gesturelock import Gesture, TimedPoint, single_stroke


# --- membership oracle --------------------------------------------------------

def membership_grid_oracle(d: float, core: float, support: float) -> float:
    """Trapezoid membership via lookup in a dense piecewise-linear distance grid.

    The grid is seeded from the shape's vertices and refined to ~2e5 samples
    (vertices kept exact, so the kinks are represented without error).
    """
    far = support * 1.5 + 1.0
    if core > 0:
        vx = np.array([0.0, core, support, far])
        vy = np.array([1.0, 1.0, 0.0, 0.0])
    else:
        vx = np.array([0.0, support, far])
        vy = np.array([1.0, 0.0, 0.0])
    grid = np.union1d(np.linspace(0.0, far, 200_001), vx)
    dense = np.interp(grid, vx, vy)
    return float(np.interp(min(abs(d), far), grid, dense))


# --- resample oracle ----------------------------------------------------------

def resample_walk_oracle(points: list[tuple[float, float]], n: int) -> list[tuple[float, float]]:
    """Arc-length resampling by stepping segment-by-segment and inserting markers."""
    pts = [list(p) for p in points]
    total = sum(math.dist(pts[i - 1], pts[i]) for i in range(1, len(pts)))
    if total == 0.0:
        return [tuple(pts[0]) for _ in range(n)]
    interval = total / (n - 1)
    walked = 0.0
    out: list[tuple[float, float]] = [tuple(pts[0])]
    i = 1
    while i < len(pts):
        d = math.dist(pts[i - 1], pts[i])
        if d > 0 and walked + d >= interval:
            t = (interval - walked) / d
            q = [pts[i - 1][0] + t * (pts[i][0] - pts[i - 1][0]),
                 pts[i - 1][1] + t * (pts[i][1] - pts[i - 1][1])]
            out.append(tuple(q))
            pts.insert(i, q)
            walked = 0.0
        else:
            walked += d
        i += 1
    while len(out) < n:
        out.append(tuple(pts[-1]))
    return out[:n]


# --- grid encoding oracle -------------------------------------------------------

def grid_cells_oracle(points: list[tuple[float, float]], rows: int, cols: int,
                      oversample: int = 40) -> list[int]:
    """Cell sequence by sampling every segment at 1/oversample of a cell."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    cell_w = (max_x - min_x) / cols
    cell_h = (max_y - min_y) / rows
    step = min(cell_w, cell_h) / oversample

    def cell(x: float, y: float) -> int:
        col = min(int(math.floor((x - min_x) / cell_w)), cols - 1)
        row = min(int(math.floor((y - min_y) / cell_h)), rows - 1)
        return row * cols + col + 1

    cells = [cell(points[0][0], points[0][1])]
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        length = math.hypot(x1 - x0, y1 - y0)
        substeps = max(1, math.ceil(length / step))
        for k in range(1, substeps + 1):
            a = k / substeps
            c = cell(x0 + a * (x1 - x0), y0 + a * (y1 - y0))
            if cells[-1] != c:
                cells.append(c)
    return cells


# --- generators ----------------------------------------------------------------

def random_gesture(rng: np.random.Generator, n_points: int = 24,
                   canvas: tuple[int, int] = (800, 600), margin: float = 80.0) -> Gesture:
    """Random-walk gesture kept ``margin`` pixels away from every canvas edge."""
    w, h = canvas
    x = rng.uniform(margin, w - margin)
    y = rng.uniform(margin, h - margin)
    pts = [(x, y)]
    for _ in range(n_points - 1):
        x = float(np.clip(x + rng.uniform(-60, 60), margin, w - margin))
        y = float(np.clip(y + rng.uniform(-60, 60), margin, h - margin))
        pts.append((x, y))
    return single_stroke(pts, w, h)


def drift_gesture(rng: np.random.Generator, n_points: int = 32, lead_step: float = 60.0,
                  canvas: tuple[int, int] = (2000, 800), margin: float = 80.0) -> Gesture:
    """Gesture whose leading points move steadily away from the start.

    The first points advance at least ``lead_step`` in x per sample, so the
    shift-correction anchor search cannot confuse a later leading point with
    the first one. Use lead_step > 2*sqrt(2)*max_shift when testing the
    translation-invariance property.
    """
    w, h = canvas
    x = margin
    y = h / 2.0
    pts = [(x, y)]
    for i in range(n_points - 1):
        if i < 8:
            x += lead_step + rng.uniform(0, lead_step / 4)
        else:
            x = float(np.clip(x + rng.uniform(-40, 40), margin, w - margin))
        y = float(np.clip(y + rng.uniform(-40, 40), margin, h - margin))
        pts.append((x, y))
    return single_stroke(pts, w, h)


# --- engineered fixtures ---------------------------------------------------------

def straight_reference() -> Gesture:
    """Four uniformly spaced collinear points; a fixed point of 4-point resampling."""
    return single_stroke([(0, 0), (100, 0), (200, 0), (300, 0)], 400, 100)


def partially_matching_candidate() -> Gesture:
    """Folded path whose 4-point resampling lands at x = 0, 116, 225, 300.

    Paired with straight_reference() this produces per-pixel offsets
    (0, 16, 25, 0) and, with a 0..20 ramp, per-pixel degrees (1, 0.2, 0, 1):
    a 55% overall match that the all-or-nothing circle test rejects.
    """
    return single_stroke([(0, 0), (228.5, 0), (225, 0), (320.5, 0), (300, 0)], 400, 100)


def arch_gesture() -> Gesture:
    """Up the left edge, across the top, down the right edge of a square box."""
    return single_stroke([(12.5, 387.5), (12.5, 12.5), (387.5, 12.5), (387.5, 387.5)],
                         400, 400)

ARCH_CELLS_4X4 = [13, 9, 5, 1, 2, 3, 4, 8, 12, 16]
