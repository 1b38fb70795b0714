"""Score a shaky redraw of a zigzag against the original drawing.

Walks the full pipeline: rescale to the reference canvas, cancel the global
placement shift, resample both drawings to the same point count, score every
pixel pair, average, and compare with the acceptance threshold.
"""

import numpy as np

from gesturelock import MatchConfig, match_gestures, percent_display, single_stroke

rng = np.random.default_rng(42)

# The enrolled password: a zigzag drawn on an 800x600 image.
zigzag = [(100, 500), (250, 150), (400, 480), (550, 160), (700, 450)]
reference = single_stroke(zigzag, 800, 600)

# The login attempt: same zigzag, but drawn 12px right / 8px down of the
# original, with a couple of pixels of hand tremor, on a half-size display.
redraw = [((x + 12 + rng.normal(0, 2)) / 2, (y + 8 + rng.normal(0, 2)) / 2)
          for x, y in zigzag]
candidate = single_stroke(redraw, 400, 300)

config = MatchConfig(threshold=0.8)
result = match_gestures(reference, candidate, config)

print(f"alignment offset applied: ({result.offset[0]:+.1f}, {result.offset[1]:+.1f})")
print(f"resampled to {len(result.per_pixel)} pixel pairs")

worst = sorted(range(len(result.per_pixel)), key=lambda i: result.per_pixel[i].degree)[:5]
print("five weakest pixel pairs:")
for i in worst:
    m = result.per_pixel[i]
    print(f"  pair {i:2d}: axis degrees ({m.axis_degrees[0]:.3f}, {m.axis_degrees[1]:.3f})"
          f" -> {m.degree:.3f}")

print(f"\nmatching degree: {result.degree:.4f} ({percent_display(result.degree)}%)")
print(f"threshold {config.threshold} -> {'ACCEPTED' if result.accepted else 'REJECTED'}")
