"""Term operations: enumerate the k-ary part of the clone of an algebra and
search it for terms with prescribed equational behaviour.

Terms are built from variables x1..xk and the operation symbols of the
algebra; each is evaluated to a flat table over k-tuples of carrier
elements, and the search works up the term-size ladder so the first witness
found for any table is one of minimal size.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .core import FiniteAlgebra, ZERO_OP


@dataclass(frozen=True)
class Term:
    """head is an operation name or a variable name like ``x1``."""

    head: str
    args: tuple["Term", ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(t.size for t in self.args)

    @property
    def op_nodes(self) -> int:
        """Operation symbols used, not counting variables."""
        own = 0 if self.head.startswith("x") and self.head[1:].isdigit() else 1
        return own + sum(t.op_nodes for t in self.args)

    def __str__(self):
        if self.head == ZERO_OP:
            return "0"
        if not self.args:
            return self.head
        return f"{self.head}({', '.join(str(t) for t in self.args)})"


def evaluate_term(A: FiniteAlgebra, term: Term, k: int) -> tuple[int, ...]:
    """Flat table of the k-ary term operation, row-major over argument tuples."""

    def run(t: Term, args: tuple[int, ...]) -> int:
        if t.head in A.tables:
            return A.apply(t.head, *(run(s, args) for s in t.args))
        i = int(t.head[1:])
        if not (t.head.startswith("x") and 1 <= i <= k):
            raise ValueError(f"unknown symbol {t.head!r} in a {k}-ary term")
        return args[i - 1]

    if k == 0:
        return (run(term, ()),)
    return tuple(run(term, args) for args in itertools.product(range(A.size), repeat=k))


@dataclass(frozen=True)
class TermOp:
    arity: int
    table: tuple[int, ...]
    witness: Term


@dataclass(frozen=True)
class TermOps:
    """The k-ary term operations found; complete=False means the table cap
    stopped the enumeration early."""

    arity: int
    term_ops: tuple[TermOp, ...]
    complete: bool


@dataclass(frozen=True)
class TermSearch:
    """status: found (term_op set), none (search exhaustive, no witness),
    unknown (cap hit before exhaustion).  explored counts the distinct term
    operations generated before the search stopped."""

    status: str
    term_op: TermOp | None = None
    explored: int = 0


def _closure(A: FiniteAlgebra, arity: int, cap: int, stop=None):
    """Size-leveled closure of the k-ary clone part.

    Returns (ops, complete, hit): the TermOps found in first-seen order, a
    completeness flag, and the TermOp accepted by ``stop`` if any.  Level s
    holds the terms with s symbols; the iteration ends when every level up
    to the maximum possible composition size is exhausted.
    """
    n = A.size
    by_table: dict[tuple[int, ...], TermOp] = {}
    order: list[TermOp] = []
    levels: dict[int, list[TermOp]] = {}

    def admit(term: Term, table: tuple[int, ...]):
        if table in by_table:
            return None
        op = TermOp(arity, table, term)
        by_table[table] = op
        order.append(op)
        levels.setdefault(term.size, []).append(op)
        if stop is not None and stop(op):
            return op
        return None

    for i in range(1, arity + 1):
        term = Term(f"x{i}")
        hit = admit(term, evaluate_term(A, term, arity))
        if hit:
            return order, True, hit
    for opname, k in A.signature.ops:
        if k == 0:
            term = Term(opname)
            hit = admit(term, evaluate_term(A, term, arity))
            if hit:
                return order, True, hit

    max_op_arity = max(k for _, k in A.signature.ops)
    size = 1
    while True:
        size += 1
        # A composition f(t_1..t_m) has size 1 + sum of part sizes, and every
        # part already exists at a smaller level, so this bound is exhaustive.
        largest = max((s for s in levels if levels[s]), default=0)
        if size > 1 + max_op_arity * largest:
            return order, True, None
        for opname, k in sorted((name, k) for name, k in A.signature.ops if k >= 1):
            for sizes in itertools.product(range(1, size), repeat=k):
                if 1 + sum(sizes) != size:
                    continue
                pools = [levels.get(s, ()) for s in sizes]
                for parts in itertools.product(*pools):
                    idx_cols = [p.table for p in parts]
                    table = A.tables[opname]
                    out = []
                    for row in range(len(idx_cols[0])):
                        idx = 0
                        for col in idx_cols:
                            idx = idx * n + col[row]
                        out.append(table[idx])
                    hit = admit(Term(opname, tuple(p.witness for p in parts)),
                                tuple(out))
                    if hit:
                        return order, True, hit
                    if len(order) >= cap:
                        return order, False, None


def generate_term_ops(A: FiniteAlgebra, arity: int,
                      caps: Caps | None = None) -> TermOps:
    """All k-ary term operations of A, up to the table cap."""
    caps = caps or DEFAULT_CAPS
    if arity < 0:
        raise ValueError("arity must be non-negative")
    ops, complete, _ = _closure(A, arity, caps.clone_tables)
    return TermOps(arity, tuple(ops), complete)


def find_subtraction_term(A: FiniteAlgebra, caps: Caps | None = None) -> TermSearch:
    """Search the binary clone part for s with s(x,x)=0 and s(x,0)=x."""
    caps = caps or DEFAULT_CAPS
    n = A.size

    def is_subtraction(op: TermOp) -> bool:
        t = op.table
        return all(t[x * n + x] == 0 and t[x * n] == x for x in range(n))

    ops, complete, hit = _closure(A, 2, caps.clone_tables, stop=is_subtraction)
    if hit is not None:
        return TermSearch("found", hit, len(ops))
    return TermSearch("none" if complete else "unknown", None, len(ops))


def find_unit_term(A: FiniteAlgebra, caps: Caps | None = None) -> TermSearch:
    """Search the binary clone part for p with p(x,0)=x and p(0,x)=x."""
    caps = caps or DEFAULT_CAPS
    n = A.size

    def is_unit(op: TermOp) -> bool:
        t = op.table
        return all(t[x * n] == x and t[x] == x for x in range(n))

    ops, complete, hit = _closure(A, 2, caps.clone_tables, stop=is_unit)
    if hit is not None:
        return TermSearch("found", hit, len(ops))
    return TermSearch("none" if complete else "unknown", None, len(ops))
