"""One stray pixel: all-or-nothing rejection vs a graded 55% match.

Four pixel pairs sit at offsets 0, 16, 25 and 0 from their references. The
crisp rule (tolerance circle, radius 20) rejects the whole gesture because of
the single 25px outlier; the graded scorer reports how close the attempt
really was: per-pixel degrees 1.0, 0.2, 0.0, 1.0, averaging to 55%.
"""

from gesturelock import (
    AlignmentParams,
    CrispParams,
    MatchConfig,
    match_gestures,
    match_gestures_crisp,
    percent_display,
    single_stroke,
)

reference = single_stroke([(0, 0), (100, 0), (200, 0), (300, 0)], 400, 100)
# A folded path whose 4-point arc-length resampling lands at x = 0, 116, 225, 300.
candidate = single_stroke([(0, 0), (228.5, 0), (225, 0), (320.5, 0), (300, 0)], 400, 100)

crisp = CrispParams(tolerance=20, shape="circle")
verdict = match_gestures_crisp(reference, candidate, crisp, resample_n=4)
print(f"crisp circle (radius 20): {'accepted' if verdict else 'rejected'}")

config = MatchConfig(alignment=AlignmentParams(max_shift=0.0), resample_n=4, threshold=0.8)
result = match_gestures(reference, candidate, config)
print(f"per-pixel degrees: {[m.degree for m in result.per_pixel]}")
print(f"matching degree:   {result.degree} ({percent_display(result.degree)}%)")
print(f"threshold 0.8:     {'accepted' if result.accepted else 'rejected'}")
print(f"threshold 0.5 would have {'accepted' if result.degree >= 0.5 else 'rejected'} it")
