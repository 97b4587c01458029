"""
Rational lift of the type C involution
Replace (min, +) by (+, *) and check that the lifted map is still an
involution at random positive rational points.
"""
import random

from bktableaux.oracles import detrop_bk_c, random_king_rational

rng = random.Random(0)
x = random_king_rational(3, rng, bound=9)
print("sample point (rows top first, None = absent):")
for row in x.rows:
    print("  ", [None if v is None else str(v) for v in row])

y = detrop_bk_c(x, 2)
print("\nimage under the lifted BK_2:")
for row in y.rows:
    print("  ", [None if v is None else str(v) for v in row])

print("\napplying twice returns the point:", detrop_bk_c(y, 2) == x)

hits = sum(detrop_bk_c(detrop_bk_c(p, j), j) == p
           for p in (random_king_rational(3, rng) for _ in range(200)) for j in (1, 2))
print(f"{hits} of 400 seeded checks passed")
