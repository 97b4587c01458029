"""
Bender-Knuth involutions
Type A toggle, the type C composite with its rectification step, and a
check that the type C maps do not satisfy the braid relation.
"""
from bktableaux import formats
from bktableaux.benderknuth import bk_a_pattern, bk_c_pattern, bk_c_trace
from bktableaux.combinatorics import GTPattern, weight_pattern_bc

print("=" * 50)
print(" Type A toggle of row 3")
print("=" * 50)
P = GTPattern.padded([(13, 9, 4, 0), (10, 5, 3), (7, 3), (4,)])
print(formats.render_pattern(P))
print("  ->")
print(formats.render_pattern(bk_a_pattern(P, 3)))

print("\n" + "=" * 50)
print(" Type C, j = 2, step by step")
print("=" * 50)
P = GTPattern.padded([(3, 3, 2), (3, 2), (3,), (2,), (1,), (1,)])
labels = ["input", "BK_4", "BK_3", "BK_5", "BK_4", "rect"]
for label, Q in zip(labels, bk_c_trace(P, 2)):
    print(f"\n[{label}]  weight {weight_pattern_bc(Q)}")
    print(formats.render_pattern(Q))

# obstruction entry before rect
print("\nentry (3,4) before rect:", bk_c_trace(P, 2)[4].entry(3, 4))

# applying twice gives the input back
Q = bk_c_pattern(P, 2)
print("involution:", bk_c_pattern(Q, 2) == P)

print("\n" + "=" * 50)
print(" No braid relation")
print("=" * 50)
W = GTPattern.padded([(1, 1, 0), (1, 0, 0), (0, 0), (0, 0), (0,), (0,)])
x = W
for _ in range(3):
    x = bk_c_pattern(bk_c_pattern(x, 2), 1)
print("(BK1 BK2)^3 fixes the witness:", x == W)
print(formats.render_pattern(x))
