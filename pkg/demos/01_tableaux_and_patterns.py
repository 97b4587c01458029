"""
Tableaux and Gelfand-Tsetlin patterns
Walks through the three alphabets, their weights, and the pattern bijections.
"""
from bktableaux import formats
from bktableaux.bijections import sop_mark, sot_corestrict, tableau_to_pattern
from bktableaux.combinatorics import SIGNED, SIGNED_INF, TYPE_A, Tableau, letter_from_str, weight_tableau
from bktableaux.enumeration import enum_gt, enum_king, enum_orthogonal


def tab(kind, n, text):
    rows = [tuple(letter_from_str(s, kind) for s in r.split()) for r in text.split("/")]
    return Tableau(kind, n, tuple(rows))


print("=" * 50)
print(" Three tableaux of shape (3,3,2)")
print("=" * 50)

for kind, n, text in [(TYPE_A, 4, "1 1 3/2 3 4/3 4"),
                      (SIGNED_INF, 3, "1 2 inf/3 3 inf/3b 3b"),
                      (SIGNED, 3, "1 2 2b/3 3 3b/3b 3b")]:
    T = tab(kind, n, text)
    print(f"\n{kind} tableau:")
    print(formats.render_tableau(T))
    print("weight exponents:", weight_tableau(T))

# semistandard tableau -> GT pattern
print("\n--- type A: 113/23 ---")
P = tableau_to_pattern(tab(TYPE_A, 3, "1 1 3/2 3"))
print(formats.render_pattern(P))

# King tableau -> 4-row King pattern
print("\n--- type C: 1 1b 2 / 2 2b ---")
print(formats.render_pattern(tableau_to_pattern(tab(SIGNED, 2, "1 1b 2/2 2b"))))

# orthogonal tableau: drop the infinity cells, then circle those rows
print("\n--- type B: 1 1b inf / 2 2b ---")
T = tab(SIGNED_INF, 2, "1 1b inf/2 2b")
king, lost = sot_corestrict(T)
print("rows that lost an infinity:", sorted(lost))
print(formats.render_pattern(sop_mark(tableau_to_pattern(king), T.shape)))

print("\n--- counts ---")
print("GT patterns, n=3, (2,1):", sum(1 for _ in enum_gt(3, (2, 1))))
print("King patterns, n=2, (1,1):", sum(1 for _ in enum_king(2, (1, 1))))
print("orthogonal patterns, n=2, (1,1):", sum(1 for _ in enum_orthogonal(2, (1, 1))))
