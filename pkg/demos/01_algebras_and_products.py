"""
Finite pointed algebras, products, and homomorphisms
====================================================

Build algebras from operation tables, form binary products, and
enumerate every homomorphism between two carriers.
"""

from abelia import builtin, enumerate_homomorphisms, product, serialize_algebra

# every builtin fixture is a finite algebra whose signature contains a
# distinguished constant 0
Z2 = builtin("Z2").algebra
Z4 = builtin("Z4").algebra
print(serialize_algebra(Z4))

# operations are flat row-major tables; apply() indexes into them
print("2 + 3 mod 4 =", Z4.apply("add", 2, 3))
print("-1 mod 4 =", Z4.apply("neg", 1))

# the product carries componentwise operations plus canonical maps
P = product(Z2, Z4)
print("product carrier size:", P.size)
x = P.pair(1, 3)
print("pair (1, 3) encodes to", x, "and splits back to", P.split(x))
print("p1 sends it to", P.p1(x), "and p2 to", P.p2(x))

# homomorphism enumeration is exhaustive and deterministic
homs = list(enumerate_homomorphisms(Z4, Z2))
print("homomorphisms Z4 -> Z2:")
for h in homs:
    print("  ", list(h.mapping))
