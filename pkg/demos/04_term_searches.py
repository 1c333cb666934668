"""
Clone generation and term searches
==================================

Enumerate term operations level by level, then search the binary part of
a clone for subtraction and unit terms.
"""

from abelia import builtin, find_subtraction_term, find_unit_term, generate_term_ops

Z3 = builtin("Z3").algebra
S2 = builtin("S2").algebra

# the binary part of a clone, as tables with minimal witnesses
ops = generate_term_ops(S2, 2)
print(f"binary term operations of S2 ({len(ops.term_ops)}):")
for op in ops.term_ops:
    print("  ", op.witness, "->", list(op.table))

# a subtraction term satisfies s(x, x) = 0 and s(x, 0) = x; groups have one
found = find_subtraction_term(Z3)
print("subtraction term for Z3:", found.term_op.witness)

# a meet-semilattice provably has none: the search is exhaustive
print("subtraction term for S2:", find_subtraction_term(S2).status,
      f"({find_subtraction_term(S2).explored} operations searched)")

# unit terms p(x, 0) = x = p(0, x) exist exactly for the group fixtures
for name in ["Z2", "Z4", "B2"]:
    result = find_unit_term(builtin(name).algebra)
    witness = result.term_op.witness if result.status == "found" else "-"
    print(f"unit term for {name}: {result.status} {witness}")
