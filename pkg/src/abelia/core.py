"""Finite pointed algebras: carriers, operation tables, homomorphisms,
products, quotients, free algebras, and split-epi factorization.

Elements of an algebra of size n are the integers 0..n-1, and 0 is always
the distinguished point (the value of the nullary operation ``zero``).
Operation tables are flat tuples in row-major order over argument tuples
(last argument varies fastest), so a k-ary operation on n elements has a
table of n**k entries.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Iterator

from .caps import Caps, DEFAULT_CAPS

if TYPE_CHECKING:
    from .congruences import Congruence


class AbeliaError(Exception):
    """Base class for errors raised by this package."""


class ParseError(AbeliaError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class SignatureMismatch(AbeliaError):
    """Two algebras were combined but do not share a signature."""


class InvalidAlgebra(AbeliaError):
    """An algebra violates a structural invariant (table sizes, ranges, zero)."""


class InvalidHomomorphism(AbeliaError):
    """A map table does not commute with the operations."""


class IncompatiblePartition(AbeliaError):
    """A partition handed to quotient() is not a congruence of the algebra."""


class CapExceeded(AbeliaError):
    """A size cap was hit; the outcome is unknown rather than decided."""

    def __init__(self, what: str, needed: int, limit: int):
        self.what = what
        self.needed = needed
        self.limit = limit
        super().__init__(f"{what}: needs {needed}, cap is {limit}")


ZERO_OP = "zero"


@dataclass(frozen=True)
class Signature:
    """Operation names with arities.  Always contains the nullary ``zero``."""

    ops: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.ops]
        if len(set(names)) != len(names):
            raise InvalidAlgebra(f"duplicate operation names in {names}")
        for name, arity in self.ops:
            if not name or "#" in name or any(c.isspace() for c in name):
                raise InvalidAlgebra(f"bad operation name {name!r}")
            if arity < 0:
                raise InvalidAlgebra(f"negative arity for {name!r}")
        if (ZERO_OP, 0) not in self.ops:
            raise InvalidAlgebra("signature must contain the nullary operation zero")

    @staticmethod
    def make(ops: Iterable[tuple[str, int]] = ()) -> "Signature":
        """Build a signature, supplying the implicit ``zero`` if absent."""
        listed = tuple(ops)
        if any(name == ZERO_OP for name, _ in listed):
            return Signature(listed)
        return Signature(((ZERO_OP, 0),) + listed)

    def arity(self, name: str) -> int:
        for opname, k in self.ops:
            if opname == name:
                return k
        raise KeyError(name)


POINTED = Signature.make()


def op_table(size: int, arity: int, fn) -> tuple[int, ...]:
    """Row-major operation table computed from a python function."""
    if arity == 0:
        return (fn(),)
    return tuple(fn(*args) for args in itertools.product(range(size), repeat=arity))


@dataclass(frozen=True, repr=False)
class FiniteAlgebra:
    name: str
    size: int
    signature: Signature
    tables: dict[str, tuple[int, ...]]

    def __post_init__(self):
        if self.size < 1:
            raise InvalidAlgebra("carrier must be non-empty")
        want = {name for name, _ in self.signature.ops}
        if set(self.tables) != want:
            raise InvalidAlgebra(
                f"tables {sorted(self.tables)} do not match signature {sorted(want)}")
        for opname, arity in self.signature.ops:
            table = self.tables[opname]
            expect = self.size ** arity
            if len(table) != expect:
                raise InvalidAlgebra(
                    f"operation {opname}: table has {len(table)} entries, expected {expect}")
            if any(not (0 <= v < self.size) for v in table):
                raise InvalidAlgebra(f"operation {opname}: table entry out of range")
        if self.tables[ZERO_OP] != (0,):
            raise InvalidAlgebra("zero must name element 0")

    def elements(self) -> range:
        return range(self.size)

    def apply(self, opname: str, *args: int) -> int:
        idx = 0
        for a in args:
            idx = idx * self.size + a
        return self.tables[opname][idx]

    def __repr__(self):
        return f"<algebra {self.name}: size {self.size}>"


def hom_violation(source: FiniteAlgebra, target: FiniteAlgebra,
                  mapping: tuple[int, ...]) -> tuple[str, tuple[int, ...]] | None:
    """First (operation, argument tuple) where mapping fails to commute, else None."""
    m = target.size
    for opname, arity in source.signature.ops:
        st = source.tables[opname]
        tt = target.tables[opname]
        if arity == 0:
            if mapping[st[0]] != tt[0]:
                return (opname, ())
            continue
        for i, args in enumerate(itertools.product(range(source.size), repeat=arity)):
            ti = 0
            for a in args:
                ti = ti * m + mapping[a]
            if mapping[st[i]] != tt[ti]:
                return (opname, args)
    return None


def is_homomorphism(source: FiniteAlgebra, target: FiniteAlgebra,
                    mapping: tuple[int, ...]) -> bool:
    return (source.signature == target.signature
            and len(mapping) == source.size
            and all(0 <= v < target.size for v in mapping)
            and hom_violation(source, target, mapping) is None)


@dataclass(frozen=True, repr=False)
class Homomorphism:
    """A structure-preserving map, validated exhaustively at construction."""

    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: tuple[int, ...]

    def __post_init__(self):
        if self.source.signature != self.target.signature:
            raise SignatureMismatch(
                f"{self.source.name} and {self.target.name} have different signatures")
        if len(self.mapping) != self.source.size:
            raise InvalidHomomorphism(
                f"map table has {len(self.mapping)} entries for a carrier of {self.source.size}")
        if any(not (0 <= v < self.target.size) for v in self.mapping):
            raise InvalidHomomorphism("map table entry out of range")
        viol = hom_violation(self.source, self.target, self.mapping)
        if viol is not None:
            raise InvalidHomomorphism(f"does not commute with {viol[0]} at {viol[1]}")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def __repr__(self):
        return f"<hom {self.source.name}->{self.target.name} {list(self.mapping)}>"


def identity_hom(A: FiniteAlgebra) -> Homomorphism:
    return Homomorphism(A, A, tuple(range(A.size)))


def zero_hom(X: FiniteAlgebra, Y: FiniteAlgebra) -> Homomorphism:
    """The constant-zero map; a homomorphism for any pair of like algebras."""
    if X.signature != Y.signature:
        raise SignatureMismatch(f"{X.name} and {Y.name} have different signatures")
    return Homomorphism(X, Y, (0,) * X.size)


def compose(g: Homomorphism, f: Homomorphism) -> Homomorphism:
    """The composite g after f."""
    if f.target != g.source:
        raise ValueError("compose: inner target does not match outer source")
    return Homomorphism(f.source, g.target, tuple(g.mapping[v] for v in f.mapping))


@dataclass(frozen=True, repr=False)
class ProductAlgebra(FiniteAlgebra):
    """Componentwise product on pairs (a, b) encoded as a*|B|+b.

    Carries the canonical projections p1, p2 and the zero-padded
    inclusions i1: a -> (a, 0) and i2: b -> (0, b).
    """

    left: FiniteAlgebra
    right: FiniteAlgebra

    def pair(self, a: int, b: int) -> int:
        return a * self.right.size + b

    def split(self, e: int) -> tuple[int, int]:
        return divmod(e, self.right.size)

    @cached_property
    def p1(self) -> Homomorphism:
        nb = self.right.size
        return Homomorphism(self, self.left, tuple(e // nb for e in range(self.size)))

    @cached_property
    def p2(self) -> Homomorphism:
        nb = self.right.size
        return Homomorphism(self, self.right, tuple(e % nb for e in range(self.size)))

    @cached_property
    def i1(self) -> Homomorphism:
        nb = self.right.size
        return Homomorphism(self.left, self, tuple(a * nb for a in range(self.left.size)))

    @cached_property
    def i2(self) -> Homomorphism:
        return Homomorphism(self.right, self, tuple(range(self.right.size)))


def product(A: FiniteAlgebra, B: FiniteAlgebra) -> ProductAlgebra:
    if A.signature != B.signature:
        raise SignatureMismatch(f"product: {A.name} and {B.name} have different signatures")
    nb = B.size
    n = A.size * nb
    tables: dict[str, tuple[int, ...]] = {}
    for opname, arity in A.signature.ops:
        if arity == 0:
            ta = A.tables[opname]
            tb = B.tables[opname]
            tables[opname] = (ta[0] * nb + tb[0],)
            continue
        ta = A.tables[opname]
        tb = B.tables[opname]
        out = []
        for args in itertools.product(range(n), repeat=arity):
            ia = ib = 0
            for e in args:
                i, j = divmod(e, nb)
                ia = ia * A.size + i
                ib = ib * nb + j
            out.append(ta[ia] * nb + tb[ib])
        tables[opname] = tuple(out)
    return ProductAlgebra(f"{A.name}x{B.name}", n, A.signature, tables, A, B)


def pairing_hom(prod: ProductAlgebra, a: Homomorphism, b: Homomorphism) -> Homomorphism:
    """The tupling <a, b>: X -> A x B of two maps with a common source."""
    if a.source != b.source:
        raise ValueError("pairing_hom: the two maps must share a source")
    if a.target != prod.left or b.target != prod.right:
        raise ValueError("pairing_hom: targets must be the product factors")
    return Homomorphism(a.source, prod,
                        tuple(prod.pair(a.mapping[x], b.mapping[x])
                              for x in range(a.source.size)))


def enumerate_homomorphisms(X: FiniteAlgebra, Y: FiniteAlgebra,
                            pinned: dict[int, int] | None = None) -> Iterator[Homomorphism]:
    """Yield every homomorphism X -> Y extending ``pinned``, each exactly once.

    Backtracks over carrier elements in increasing order with image candidates
    in increasing order, propagating forced values through the operation
    tables after every choice; the stream is therefore sorted lexicographically
    by the full map table.  A pinned entry that contradicts a forced equation
    yields an empty stream, not an error.
    """
    if X.signature != Y.signature:
        raise SignatureMismatch(f"{X.name} and {Y.name} have different signatures")
    pins = dict(pinned or {})
    for e, v in pins.items():
        if not (0 <= e < X.size and 0 <= v < Y.size):
            raise ValueError(f"pinned entry {e}->{v} out of range")
    n, m = X.size, Y.size
    op_data = []
    for opname, arity in X.signature.ops:
        op_data.append((X.tables[opname], Y.tables[opname],
                        list(itertools.product(range(n), repeat=arity))))
    partial = [-1] * n
    trail: list[int] = []

    def set_cell(e: int, v: int) -> int:
        # 0 = conflict, 1 = already set to v, 2 = newly assigned
        cur = partial[e]
        if cur >= 0:
            return 1 if cur == v else 0
        partial[e] = v
        trail.append(e)
        return 2

    def propagate() -> bool:
        changed = True
        while changed:
            changed = False
            for st, tt, tuples in op_data:
                for i, args in enumerate(tuples):
                    ti = 0
                    for a in args:
                        v = partial[a]
                        if v < 0:
                            break
                        ti = ti * m + v
                    else:
                        code = set_cell(st[i], tt[ti])
                        if code == 0:
                            return False
                        if code == 2:
                            changed = True
        return True

    def walk() -> Iterator[Homomorphism]:
        try:
            idx = partial.index(-1)
        except ValueError:
            yield Homomorphism(X, Y, tuple(partial))
            return
        for v in range(m):
            mark = len(trail)
            if set_cell(idx, v) == 2 and propagate():
                yield from walk()
            while len(trail) > mark:
                partial[trail.pop()] = -1

    ok = set_cell(0, 0) != 0
    for e in sorted(pins):
        if not ok:
            break
        ok = set_cell(e, pins[e]) != 0
    if ok and propagate():
        yield from walk()


def _partition_violation(A: FiniteAlgebra, rep) -> tuple[str, tuple[int, ...]] | None:
    # Single-coordinate substitutions reach every blockwise-equal tuple by
    # transitivity, so checking them suffices.
    n = A.size
    for opname, arity in A.signature.ops:
        if arity == 0:
            continue
        table = A.tables[opname]
        for i, args in enumerate(itertools.product(range(n), repeat=arity)):
            for p, a in enumerate(args):
                stride = n ** (arity - 1 - p)
                for y in range(n):
                    if y != a and rep[y] == rep[a]:
                        j = i + (y - a) * stride
                        if rep[table[i]] != rep[table[j]]:
                            return (opname, args)
    return None


def quotient(A: FiniteAlgebra, theta: "Congruence") -> tuple[FiniteAlgebra, Homomorphism]:
    """The quotient A/theta together with its canonical surjection.

    Blocks are renumbered with the block of 0 first, the rest by least
    member in increasing order.
    """
    if theta.size != A.size:
        raise ValueError(f"congruence is over {theta.size} elements, algebra has {A.size}")
    viol = _partition_violation(A, theta.rep)
    if viol is not None:
        raise IncompatiblePartition(
            f"partition is not compatible with {viol[0]} at {viol[1]}")
    zero_rep = theta.rep[0]
    reps = [zero_rep] + sorted(r for r in set(theta.rep) if r != zero_rep)
    index = {r: i for i, r in enumerate(reps)}
    size = len(reps)
    tables: dict[str, tuple[int, ...]] = {}
    for opname, arity in A.signature.ops:
        if arity == 0:
            tables[opname] = (0,)
            continue
        table = A.tables[opname]
        out = []
        for args in itertools.product(range(size), repeat=arity):
            ia = 0
            for a in args:
                ia = ia * A.size + reps[a]
            out.append(index[theta.rep[table[ia]]])
        tables[opname] = tuple(out)
    Q = FiniteAlgebra(f"{A.name}/~", size, A.signature, tables)
    surjection = Homomorphism(A, Q, tuple(index[theta.rep[x]] for x in range(A.size)))
    return Q, surjection


def free_algebra(A: FiniteAlgebra, k: int,
                 caps: Caps | None = None) -> tuple[FiniteAlgebra, list[int]]:
    """The k-generated free algebra in the variety generated by A.

    Realized as the subalgebra of A**(A**k) generated by the k coordinate
    projections; returns the algebra (element 0 is the constant-zero vector)
    and the indices of the generators.
    """
    caps = caps or DEFAULT_CAPS
    if k < 0:
        raise ValueError("need a non-negative number of generators")
    n = A.size
    positions = n ** k
    if positions > caps.free_positions:
        raise CapExceeded("free algebra exponent positions", positions, caps.free_positions)

    elems: list[tuple[int, ...]] = [(0,) * positions]
    index: dict[tuple[int, ...], int] = {elems[0]: 0}

    def intern(vec: tuple[int, ...]) -> int:
        got = index.get(vec)
        if got is not None:
            return got
        if len(elems) >= caps.free_carrier:
            raise CapExceeded("free algebra carrier", len(elems) + 1, caps.free_carrier)
        index[vec] = len(elems)
        elems.append(vec)
        return index[vec]

    gen_ids = []
    for i in range(k):
        stride = n ** (k - 1 - i)
        gen_ids.append(intern(tuple((t // stride) % n for t in range(positions))))
    for opname, arity in A.signature.ops:
        if arity == 0 and opname != ZERO_OP:
            v = A.tables[opname][0]
            intern((v,) * positions)

    ops = [(A.tables[name], arity) for name, arity in A.signature.ops if arity >= 1]
    prev = 0
    while True:
        known = len(elems)
        for table, arity in ops:
            for combo in itertools.product(range(known), repeat=arity):
                if all(c < prev for c in combo):
                    continue
                vecs = [elems[c] for c in combo]
                out = []
                for p in range(positions):
                    idx = 0
                    for vec in vecs:
                        idx = idx * n + vec[p]
                    out.append(table[idx])
                intern(tuple(out))
        if len(elems) == known:
            break
        prev = known

    size = len(elems)
    tables: dict[str, tuple[int, ...]] = {}
    for opname, arity in A.signature.ops:
        if arity == 0:
            tables[opname] = (index[(A.tables[opname][0],) * positions],)
            continue
        table = A.tables[opname]
        out = []
        for combo in itertools.product(range(size), repeat=arity):
            vecs = [elems[c] for c in combo]
            img = []
            for p in range(positions):
                idx = 0
                for vec in vecs:
                    idx = idx * n + vec[p]
                img.append(table[idx])
            out.append(index[tuple(img)])
        tables[opname] = tuple(out)
    F = FiniteAlgebra(f"Free({A.name},{k})", size, A.signature, tables)
    return F, gen_ids


def factor_through_split_epi(f: Homomorphism, r: Homomorphism,
                             s: Homomorphism) -> Homomorphism | None:
    """Factor f: R -> T through a split epi r: R -> S with section s.

    Requires r∘s = id.  Returns the unique u: S -> T with u∘r = f when it
    exists, which happens exactly when f = f∘s∘r; otherwise None.
    """
    if s.target != r.source or s.source != r.target:
        raise ValueError("r and s do not form a retraction/section pair")
    if f.source != r.source:
        raise ValueError("f must share its source with r")
    if compose(r, s) != identity_hom(r.target):
        raise ValueError("r∘s is not the identity")
    u = compose(f, s)
    return u if compose(u, r) == f else None


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse the line-oriented algebra format.

    Layout: ``algebra <name>``, ``size <n>``, the literal ``zero 0``, then
    per operation ``op <name> <arity>`` followed by n**arity entries in
    row-major order.  ``#`` starts a comment; table entries may be split
    across lines.
    """
    tokens: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        for word in raw.split("#", 1)[0].split():
            tokens.append((lineno, word))
    pos = 0

    def peek() -> tuple[int, str] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(what: str) -> tuple[int, str]:
        nonlocal pos
        if pos >= len(tokens):
            last = tokens[-1][0] if tokens else None
            raise ParseError(f"unexpected end of input, expected {what}", last)
        tok = tokens[pos]
        pos += 1
        return tok

    def take_int(what: str) -> tuple[int, int]:
        line, word = take(what)
        try:
            return line, int(word)
        except ValueError:
            raise ParseError(f"expected {what}, got {word!r}", line) from None

    line, word = take("the keyword 'algebra'")
    if word != "algebra":
        raise ParseError(f"expected 'algebra', got {word!r}", line)
    _, name = take("an algebra name")

    line, word = take("the keyword 'size'")
    if word != "size":
        raise ParseError(f"expected 'size', got {word!r}", line)
    line, size = take_int("the carrier size")
    if size < 1:
        raise ParseError("size must be at least 1", line)

    line, word = take("the 'zero 0' declaration")
    if word != "zero":
        raise ParseError(f"missing 'zero 0' declaration, got {word!r}", line)
    line, word = take("the zero element")
    if word != "0":
        raise ParseError("the distinguished point must be element 0", line)

    ops: list[tuple[str, int]] = []
    tables: dict[str, tuple[int, ...]] = {ZERO_OP: (0,)}
    while peek() is not None:
        line, word = take("the keyword 'op'")
        if word != "op":
            raise ParseError(f"expected 'op', got {word!r}", line)
        line, opname = take("an operation name")
        if opname == ZERO_OP or opname in tables:
            raise ParseError(f"duplicate operation {opname!r}", line)
        line, arity = take_int("an arity")
        if arity < 0:
            raise ParseError("arity must be non-negative", line)
        entries = []
        for _ in range(size ** arity):
            line, value = take_int(f"a table entry for {opname}")
            if not (0 <= value < size):
                raise ParseError(f"table entry {value} out of range 0..{size - 1}", line)
            entries.append(value)
        ops.append((opname, arity))
        tables[opname] = tuple(entries)
    signature = Signature(((ZERO_OP, 0),) + tuple(ops))
    return FiniteAlgebra(name, size, signature, tables)


def serialize_algebra(A: FiniteAlgebra) -> str:
    """Render an algebra in the format parse_algebra reads (round-trips)."""
    lines = [f"algebra {A.name}", f"size {A.size}", "zero 0"]
    for opname, arity in A.signature.ops:
        if opname == ZERO_OP:
            continue
        lines.append(f"op {opname} {arity}")
        table = A.tables[opname]
        if arity == 0:
            lines.append(str(table[0]))
            continue
        for start in range(0, len(table), A.size):
            lines.append(" ".join(str(v) for v in table[start:start + A.size]))
    return "\n".join(lines) + "\n"
