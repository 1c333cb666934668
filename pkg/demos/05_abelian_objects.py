"""
Internal subtractions and derived abelian structure
===================================================

Enumerate homomorphic subtractions on an algebra, derive the abelian
group they induce, and watch the derivation fail where the
normal-projection law does not hold.
"""

from abelia import (builtin, check_np_pair, derive_abelian,
                    find_internal_subtractions, verify_group_law)

Z4 = builtin("Z4").algebra
P2 = builtin("P2").algebra

# a homomorphic s: A x A -> A with s(x,x) = 0 and s(x,0) = x
(s,) = find_internal_subtractions(Z4)
print("unique subtraction on Z4:", list(s.hom.mapping))

# from s alone: neg(x) = s(0, x), add(x, y) = s(x, neg(y))
result = derive_abelian(s)
print("derived add:", list(result.structure.add))
print("derived neg:", list(result.structure.neg))
print("matches the basic operations:",
      result.structure.add == Z4.tables["add"])

# on a bare pointed set the law fails, and uniqueness goes with it
print("np(P2, P2):", check_np_pair(P2, P2).holds)
subs = find_internal_subtractions(P2)
print("subtractions on P2:", [list(t.hom.mapping) for t in subs])
for t in subs:
    verdict = verify_group_law(t)
    outcome = "holds" if verdict.holds else f"fails at {verdict.witness}"
    print("  group law for", list(t.hom.mapping), outcome)
