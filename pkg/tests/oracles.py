"""Independent reference implementations used to derive expected values.

Everything here is deliberately naive: enumerate candidates, filter by the
definition, check pointwise through apply().  The library must agree with
these on small inputs; several frozen literals in the tests were computed
by running these functions.
"""

from __future__ import annotations

import itertools

from abelia.core import FiniteAlgebra

# Bell numbers, for sanity checks on partition enumeration.
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]


def all_pointed_maps(n, m):
    """Every map table from range(n) to range(m) sending 0 to 0."""
    for rest in itertools.product(range(m), repeat=n - 1):
        yield (0,) + rest


def commutes(A, B, mapping):
    """Definition of a homomorphism, checked through apply()."""
    for opname, arity in A.signature.ops:
        for args in itertools.product(range(A.size), repeat=arity):
            image = B.apply(opname, *(mapping[a] for a in args))
            if mapping[A.apply(opname, *args)] != image:
                return False
    return True


def brute_homs(A, B):
    """Filter every pointed map; fine for |A| <= 4 or so."""
    return [m for m in all_pointed_maps(A.size, B.size) if commutes(A, B, m)]


def backtrack_homs(A, B):
    """Cell-by-cell backtracking with pruning but no propagation.

    Candidate values ascend, so the output comes in lexicographic order.
    """
    n, m = A.size, B.size
    by_cell = [[] for _ in range(n)]
    for opname, arity in A.signature.ops:
        for args in itertools.product(range(n), repeat=arity):
            res = A.apply(opname, *args)
            inst = (opname, args, res)
            for cell in set(args) | {res}:
                by_cell[cell].append(inst)
    table = [-1] * n
    out = []

    def admissible(cell):
        for opname, args, res in by_cell[cell]:
            vals = [table[a] for a in args]
            if any(v < 0 for v in vals) or table[res] < 0:
                continue
            if B.apply(opname, *vals) != table[res]:
                return False
        return True

    def fill(i):
        if i == n:
            out.append(tuple(table))
            return
        for v in range(m):
            table[i] = v
            if admissible(i):
                fill(i + 1)
        table[i] = -1

    table[0] = 0
    if admissible(0):
        fill(1)
    return out


def oracle_product(A, B):
    """Componentwise product built straight from the definition."""
    n = A.size * B.size
    tables = {}
    for opname, arity in A.signature.ops:
        entries = []
        for args in itertools.product(range(n), repeat=arity):
            ia = A.apply(opname, *(e // B.size for e in args))
            ib = B.apply(opname, *(e % B.size for e in args))
            entries.append(ia * B.size + ib)
        tables[opname] = tuple(entries)
    return FiniteAlgebra(f"{A.name}*{B.name}", n, A.signature, tables)


def partitions(n):
    """All partitions of range(n), as least-representative tables."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def grow(i, maxblock):
        if i == n:
            first = {}
            rep = []
            for x, b in enumerate(rgs):
                first.setdefault(b, x)
                rep.append(first[b])
            yield tuple(rep)
            return
        for b in range(maxblock + 2):
            rgs[i] = b
            yield from grow(i + 1, max(maxblock, b))

    yield from grow(1, 0)


def partition_compatible(A, rep):
    """Definition: blockwise-equal argument tuples give equal-block outputs."""
    for opname, arity in A.signature.ops:
        seen = {}
        for args in itertools.product(range(A.size), repeat=arity):
            key = tuple(rep[a] for a in args)
            out = rep[A.apply(opname, *args)]
            if seen.setdefault(key, out) != out:
                return False
    return True


def congruence_reps_by_filter(A):
    """Every congruence of A, by filtering all partitions of the carrier."""
    return [rep for rep in partitions(A.size) if partition_compatible(A, rep)]


def np_partition_oracle(A, B):
    """Definitive pair-level verdict by quantifying over raw partitions.

    The law fails iff some compatible partition collapses the (a, 0) axis
    to a point yet separates some (a, b) from (0, b).
    """
    P = oracle_product(A, B)
    nb = B.size
    axis = [a * nb for a in range(A.size)]
    for rep in partitions(P.size):
        if any(rep[c] != rep[0] for c in axis):
            continue
        if not partition_compatible(P, rep):
            continue
        for a in range(A.size):
            for b in range(nb):
                if rep[a * nb + b] != rep[b]:
                    return False
    return True


def np_hom_refutes(A, B, targets):
    """True if some hom f: A x B -> C with f(a, 0) = 0 breaks the
    translation f(a, b) = f(0, b).  One-sided over the listed targets:
    False only means no counterexample was found there."""
    P = oracle_product(A, B)
    nb = B.size
    for C in targets:
        for f in backtrack_homs(P, C):
            if any(f[a * nb] != 0 for a in range(A.size)):
                continue
            for a in range(A.size):
                for b in range(nb):
                    if f[a * nb + b] != f[b]:
                        return True
    return False


def depth_closure_tables(A, arity, depth=6):
    """Tables of term operations reachable within the given composition
    depth; depth 6 is past the fixpoint for every two-element fixture."""
    n = A.size
    rows = list(itertools.product(range(n), repeat=arity))
    current = set()
    for i in range(arity):
        current.add(tuple(args[i] for args in rows))
    for opname, k in A.signature.ops:
        if k == 0:
            current.add(tuple(A.apply(opname) for _ in rows))
    for _ in range(depth):
        grown = set(current)
        for opname, k in A.signature.ops:
            if k == 0:
                continue
            for parts in itertools.product(sorted(current), repeat=k):
                grown.add(tuple(A.apply(opname, *(p[r] for p in parts))
                                for r in range(len(rows))))
        current = grown
    return current


def brute_subtraction_tables(A):
    """Subtraction candidates by filtering: tables over A x A satisfying
    both laws and commuting with the operations, in lexicographic order."""
    P = oracle_product(A, A)
    n = A.size
    out = []
    for f in backtrack_homs(P, A):
        if all(f[x * n + x] == 0 and f[x * n] == x for x in range(n)):
            out.append(f)
    return out
