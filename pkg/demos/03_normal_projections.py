"""
The normal-projection law on pairs
==================================

Decide whether collapsing the axis A x {0} of a product A x B recovers B,
compare the generated-congruence check with a full lattice scan, and
exercise the stronger slice-translation property.
"""

from abelia import builtin, centralic_check, check_np_pair, shifting_shape_check

Z3 = builtin("Z3").algebra
P2 = builtin("P2").algebra

# for the cyclic group the law holds: the only congruence collapsing the
# axis is the kernel of the second projection
verdict = check_np_pair(Z3, Z3)
print("np(Z3, Z3):", verdict.holds)
print("theta blocks:", verdict.theta.blocks())

# for a bare pointed set it fails, with the first offending point
verdict = check_np_pair(P2, P2)
print("np(P2, P2):", verdict.holds, "witness:", verdict.witness)

# an independent decision procedure scans every congruence of the product
scan = shifting_shape_check(P2, P2)
print("lattice scan agrees:", scan.holds == verdict.holds)

# the slice-translation property is strictly stronger; each failure names
# the congruence and the triple that breaks the translation
report = centralic_check(P2, P2)
print("centralic(P2, P2): instances =", report.instances,
      "failures =", len(report.failures))
first = report.failures[0]
print("first failure at point", first.point, "with theta", first.theta.blocks())
