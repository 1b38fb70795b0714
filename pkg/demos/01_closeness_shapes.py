"""How the per-axis closeness ramp and the two-axis combination behave.

Prints the membership degree as a coordinate drifts away from a reference,
for a triangle (core 0) and a trapezoid (core 5), then shows how the two
t-norms combine unequal axis degrees.
"""

import numpy as np

from gesturelock import MembershipParams, TimedPoint, axis_degree, pixel_degree

triangle = MembershipParams(core_halfwidth=0, support_halfwidth=20)
trapezoid = MembershipParams(core_halfwidth=5, support_halfwidth=20)

print("degree of closeness vs distance (support half-width 20)")
print(f"{'distance':>9}  {'triangle':>9}  {'trapezoid':>10}")
for d in np.arange(0, 24, 2.0):
    tri = axis_degree(0.0, d, triangle)
    trap = axis_degree(0.0, d, trapezoid)
    print(f"{d:9.1f}  {tri:9.3f}  {trap:10.3f}")

# The same distance scored in two dimensions: the x offset is 5 (degree 0.75)
# and the y offset is 10 (degree 0.50). "minimum" keeps the worst axis,
# "product" compounds the two.
rp = TimedPoint(100, 100, 0)
cp = TimedPoint(105, 110, 0)
for tnorm in ("minimum", "product"):
    params = MembershipParams(core_halfwidth=0, support_halfwidth=20, tnorm=tnorm)
    m = pixel_degree(rp, cp, params)
    print(f"\ntnorm={tnorm}: axis degrees {m.axis_degrees} -> combined {m.degree:.4f}")
