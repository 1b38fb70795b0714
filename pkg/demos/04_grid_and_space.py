"""Grid encoding of a drawn shape, and the password-space calculator.

An arch drawn up the left edge, across the top and down the right edge of its
bounding box crosses ten cells of a 4x4 grid in a fixed order; that cell
sequence is itself a usable crisp password representation. The second half
prints how the theoretical password space floor(w*h/t^2)^c moves with image
size, tolerance and click count.
"""

from gesturelock import GridSpec, grid_encode, password_space, region_pixel_count, single_stroke

arch = single_stroke([(12.5, 387.5), (12.5, 12.5), (387.5, 12.5), (387.5, 387.5)], 400, 400)
spec = GridSpec(rows=4, cols=4)

cells = grid_encode(arch, spec)
print("cell numbering (4x4, row-major from top-left):")
for r in range(4):
    print("   " + " ".join(f"{r * 4 + c + 1:2d}" for c in range(4)))
print(f"\narch encodes as: {','.join(str(c) for c in cells)}")
print(f"distinct cells used: {region_pixel_count(arch, spec)}")

print("\npassword space floor(w*h/t^2)^c:")
print(f"{'image':>12} {'t':>3} {'c':>2} {'space':>22}")
for w, h, t, c in [(380, 380, 19, 5), (380, 380, 19, 3), (380, 380, 38, 5),
                   (1024, 768, 19, 5), (1920, 1080, 19, 5)]:
    print(f"{w:>5}x{h:<6} {t:>3} {c:>2} {password_space(w, h, t, c):>22,}")
