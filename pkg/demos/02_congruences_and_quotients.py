"""
Congruence lattices and quotient algebras
=========================================

Generate the least congruence containing a pair, list a whole lattice,
and take a quotient together with its canonical surjection.
"""

from abelia import all_congruences, builtin, cg, kernel_congruence, product, quotient

Z4 = builtin("Z4").algebra

# the least congruence identifying 0 with 2 also glues 1 with 3
theta = cg(Z4, [(0, 2)])
print("Cg(0, 2) blocks:", theta.blocks())

# quotienting by it collapses Z4 onto a two-element group
Q, pi = quotient(Z4, theta)
print("quotient size:", Q.size)
print("surjection table:", list(pi.mapping))
print("kernel equals the congruence:", kernel_congruence(pi).rep == theta.rep)

# the full lattice of a small product, coarsest last
P = product(builtin("Z2").algebra, builtin("Z2").algebra)
lattice = all_congruences(P)
print(f"congruences of {P.name}: {len(lattice)}")
for c in lattice:
    print("  ", c.blocks())
