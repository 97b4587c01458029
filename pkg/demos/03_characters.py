"""
Generating functions and Weyl characters
Symplectic and orthogonal polynomials from tableaux, compared against the
alternant formula and expanded back into the symplectic basis.
"""
from bktableaux.enumeration import orthogonal, schur, symplectic
from bktableaux.laurent import basis_expand, format_poly, is_w_invariant
from bktableaux.oracles import character_b, character_c

for n, lam in [(1, (1,)), (2, (1, 1)), (2, (2,))]:
    sp = symplectic(n, lam)
    print(f"sp_{lam} (n={n}) = {format_poly(sp)}")
    print("   matches alternant ratio:", sp == character_c(n, lam))
    print("   W-invariant:", is_w_invariant(sp))

print()
o = orthogonal(2, (1, 0))
print("o_(1) (n=2) =", format_poly(o))
print("   matches alternant ratio:", o == character_b(2, (1, 0)))
print("   coefficient mass:", o.mass())

print()
print("s_(2,1) (n=3) has", schur(3, (2, 1)).mass(), "terms counted with multiplicity")

# sp_(1)^2 decomposes into three basis elements
sq = symplectic(2, (1,)) * symplectic(2, (1,))
print("\nsp_(1)^2 =", {lam: c for lam, c in sorted(basis_expand(sq, "symplectic", 2).items())})
