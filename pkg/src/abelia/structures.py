"""Internal subtractions and derived abelian-group structure.

An internal subtraction on A is a homomorphism s from product(A, A) to A
with s(x, x) = 0 and s(x, 0) = x.  When the pair-level projection law holds
at (A, A) and (A, A x A), such an s is unique, satisfies the group law
s(s(x,z), s(y,z)) = s(x,y), and induces an abelian group; the checks here
verify those claims table by table, and the crystallographic harness runs
them over a whole catalog with the preconditions tracked explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .core import (CapExceeded, FiniteAlgebra, Homomorphism, ProductAlgebra,
                   enumerate_homomorphisms, hom_violation, product)
from .normalproj import check_np_pair


@dataclass(frozen=True)
class InternalSubtraction:
    algebra: FiniteAlgebra
    hom: Homomorphism

    def __post_init__(self):
        src = self.hom.source
        if not isinstance(src, ProductAlgebra) or src.left != self.algebra \
                or src.right != self.algebra or self.hom.target != self.algebra:
            raise ValueError("subtraction must map product(A, A) into A")
        for x in range(self.algebra.size):
            if self(x, x) != 0:
                raise ValueError(f"s({x},{x}) != 0")
            if self(x, 0) != x:
                raise ValueError(f"s({x},0) != {x}")

    def __call__(self, x: int, y: int) -> int:
        return self.hom.mapping[x * self.algebra.size + y]


@dataclass(frozen=True)
class LawVerdict:
    holds: bool
    witness: tuple[int, ...] | None


def find_internal_subtractions(A: FiniteAlgebra,
                               caps: Caps | None = None) -> list[InternalSubtraction]:
    """All internal subtractions on A, in lexicographic table order.

    Backtracking over the |A|^2 table cells with the forced diagonal and
    first-column values pinned; homomorphism constraints prune as usual.
    """
    caps = caps or DEFAULT_CAPS
    P = product(A, A)
    if P.size > caps.structure_src:
        raise CapExceeded("subtraction search table", P.size, caps.structure_src)
    pins = {}
    for x in range(A.size):
        pins[P.pair(x, x)] = 0
        pins[P.pair(x, 0)] = x
    return [InternalSubtraction(A, h) for h in enumerate_homomorphisms(P, A, pins)]


def verify_group_law(s: InternalSubtraction) -> LawVerdict:
    """Check s(s(x,z), s(y,z)) = s(x,y) over all triples; first failing
    (x, y, z) in lexicographic order is the witness."""
    n = s.algebra.size
    for x, y, z in itertools.product(range(n), repeat=3):
        if s(s(x, z), s(y, z)) != s(x, y):
            return LawVerdict(False, (x, y, z))
    return LawVerdict(True, None)


@dataclass(frozen=True)
class AbelianStructure:
    """Derived addition add(x,y) = s(x, s(0,y)) and negation neg(x) = s(0,x);
    only constructed once every abelian group axiom has been verified."""

    algebra: FiniteAlgebra
    subtraction: InternalSubtraction
    add: tuple[int, ...]
    neg: tuple[int, ...]

    def plus(self, x: int, y: int) -> int:
        return self.add[x * self.algebra.size + y]

    def minus(self, x: int) -> int:
        return self.neg[x]


@dataclass(frozen=True)
class AbelianResult:
    structure: AbelianStructure | None
    failed_axiom: str | None
    witness: tuple[int, ...] | None

    @property
    def ok(self) -> bool:
        return self.structure is not None


def derive_abelian(s: InternalSubtraction) -> AbelianResult:
    """Build the derived addition and negation and audit the group axioms.

    Axioms are checked in a fixed order (unit, inverse, associativity,
    commutativity, addition-homomorphism) and the first failure is returned
    with a witness tuple instead of a structure.
    """
    A = s.algebra
    n = A.size
    neg = tuple(s(0, x) for x in range(n))
    add = tuple(s(x, neg[y]) for x in range(n) for y in range(n))

    def plus(x: int, y: int) -> int:
        return add[x * n + y]

    for x in range(n):
        if plus(x, 0) != x or plus(0, x) != x:
            return AbelianResult(None, "unit", (x,))
    for x in range(n):
        if plus(x, neg[x]) != 0:
            return AbelianResult(None, "inverse", (x,))
    for x, y, z in itertools.product(range(n), repeat=3):
        if plus(plus(x, y), z) != plus(x, plus(y, z)):
            return AbelianResult(None, "associativity", (x, y, z))
    for x in range(n):
        for y in range(x + 1, n):
            if plus(x, y) != plus(y, x):
                return AbelianResult(None, "commutativity", (x, y))
    viol = hom_violation(s.hom.source, A, add)
    if viol is not None:
        return AbelianResult(None, "addition-homomorphism", viol[1])
    return AbelianResult(AbelianStructure(A, s, add, neg), None, None)


def check_homomorphic(g: Homomorphism, s: InternalSubtraction,
                      s_prime: InternalSubtraction) -> LawVerdict:
    """Check g(s(x,y)) = s'(g(x), g(y)) over all pairs."""
    if g.source != s.algebra or g.target != s_prime.algebra:
        raise ValueError("map endpoints do not match the subtraction carriers")
    for x in range(g.source.size):
        for y in range(g.source.size):
            if g(s(x, y)) != s_prime(g(x), g(y)):
                return LawVerdict(False, (x, y))
    return LawVerdict(True, None)


@dataclass(frozen=True)
class Construction1Report:
    """Stages of the ternary-map argument deriving the group law from the
    projection law at (A, A x A)."""

    f_is_homomorphism: bool
    zero_section_ok: bool
    np_holds: bool
    conclusion_ok: bool | None
    group_law: LawVerdict


def verify_proof_construction_1(s: InternalSubtraction,
                                caps: Caps | None = None) -> Construction1Report:
    """Materialize f(z, (x, y)) = s(s(x,z), s(y,z)) on product(A, A x A).

    Checks that f is a homomorphism and vanishes on the z-axis; when the
    projection law holds for (A, A x A), its translation-invariance
    conclusion f(z, w) = f(0, w) is exactly the group law for s.
    """
    caps = caps or DEFAULT_CAPS
    A = s.algebra
    sq = product(A, A)
    dom = product(A, sq)
    if dom.size > caps.cg:
        raise CapExceeded("congruence generation carrier", dom.size, caps.cg)
    table = []
    for e in range(dom.size):
        z, w = dom.split(e)
        x, y = sq.split(w)
        table.append(s(s(x, z), s(y, z)))
    table = tuple(table)
    f_hom = hom_violation(dom, A, table) is None
    zero_ok = all(table[dom.pair(z, 0)] == 0 for z in range(A.size))
    np = check_np_pair(A, sq, caps)
    conclusion: bool | None = None
    if np.holds:
        conclusion = all(table[dom.pair(z, w)] == table[dom.pair(0, w)]
                         for z in range(A.size) for w in range(sq.size))
    return Construction1Report(f_hom, zero_ok, np.holds, conclusion,
                               verify_group_law(s))


@dataclass(frozen=True)
class Construction2Report:
    """Stages of the two-variable comparison map tying preservation of the
    derived addition to preservation of the subtraction."""

    applicable: bool
    reason: str | None
    zero_ok: bool | None
    np_holds: bool | None
    translation_ok: bool | None
    addition_preserved: bool | None
    subtraction_preserved: bool | None


def verify_proof_construction_2(g: Homomorphism, s: InternalSubtraction,
                                s_prime: InternalSubtraction,
                                caps: Caps | None = None) -> Construction2Report:
    """Materialize f(x, y) = s'(g(a(x,y)), a'(g(x), g(y))) on product(X, X).

    Applicable only when both subtractions derive abelian structures.  Then
    f(x, 0) = 0 always; when the projection law holds at (X, X), the forced
    translation f(x, y) = f(0, y) makes g preserve addition, which must
    coincide with preserving subtraction.
    """
    caps = caps or DEFAULT_CAPS
    if g.source != s.algebra or g.target != s_prime.algebra:
        raise ValueError("map endpoints do not match the subtraction carriers")
    left = derive_abelian(s)
    right = derive_abelian(s_prime)
    if not left.ok or not right.ok:
        which = s.algebra.name if not left.ok else s_prime.algebra.name
        return Construction2Report(False, f"no abelian structure on {which}",
                                   None, None, None, None, None)
    a, a_p = left.structure, right.structure
    X = g.source
    dom = product(X, X)
    table = tuple(s_prime(g(a.plus(*dom.split(e))),
                          a_p.plus(g(dom.split(e)[0]), g(dom.split(e)[1])))
                  for e in range(dom.size))
    zero_ok = all(table[dom.pair(x, 0)] == 0 for x in range(X.size))
    np = check_np_pair(X, X, caps)
    translation: bool | None = None
    if np.holds:
        translation = all(table[dom.pair(x, y)] == table[dom.pair(0, y)]
                          for x in range(X.size) for y in range(X.size))
    addition = all(g(a.plus(x, y)) == a_p.plus(g(x), g(y))
                   for x in range(X.size) for y in range(X.size))
    subtraction = check_homomorphic(g, s, s_prime).holds
    return Construction2Report(True, None, zero_ok, np.holds, translation,
                               addition, subtraction)


@dataclass(frozen=True)
class CrystalEntry:
    """Per-algebra survey line; anomalies are findings outside verified
    preconditions, violations (collected on the report) falsify the theory."""

    name: str
    np_self: bool
    np_square: bool
    subtractions: int
    group_law_ok: bool | None
    abelian: bool | None
    anomalies: tuple[str, ...]


@dataclass(frozen=True)
class CrystalReport:
    entries: tuple[CrystalEntry, ...]
    hom_checks: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def crystallographic_report(catalog: list[FiniteAlgebra],
                            caps: Caps | None = None) -> CrystalReport:
    """Survey a catalog for internal subtractions and abelian structure.

    Per algebra: both projection-law preconditions, the subtraction count,
    and (for the first subtraction found) the group law and derived
    structure.  Where the preconditions verify, uniqueness, the group law,
    abelianness, and homomorphicity of every map between such algebras are
    hard assertions; where they fail, findings are recorded as anomalies.
    """
    caps = caps or DEFAULT_CAPS
    entries: list[CrystalEntry] = []
    violations: list[str] = []
    verified: list[tuple[FiniteAlgebra, InternalSubtraction, AbelianStructure]] = []
    for A in sorted(catalog, key=lambda X: X.name):
        np_self = check_np_pair(A, A, caps).holds
        np_square = check_np_pair(A, product(A, A), caps).holds
        subs = find_internal_subtractions(A, caps)
        anomalies: list[str] = []
        preconditions = np_self and np_square
        group_ok: bool | None = None
        abelian: bool | None = None
        if subs:
            law = verify_group_law(subs[0])
            group_ok = law.holds
            result = derive_abelian(subs[0])
            abelian = result.ok
        problems: list[str] = []
        if len(subs) > 1:
            problems.append(f"{A.name}: {len(subs)} internal subtractions")
        if subs and not group_ok:
            problems.append(f"{A.name}: group law fails at {law.witness}")
        if subs and not abelian:
            problems.append(f"{A.name}: derived structure fails {result.failed_axiom}")
        if preconditions:
            violations.extend(problems)
            if subs and abelian:
                verified.append((A, subs[0], result.structure))
        else:
            anomalies.extend(problems)
        entries.append(CrystalEntry(A.name, np_self, np_square, len(subs),
                                    group_ok, abelian, tuple(anomalies)))
    hom_checks = 0
    for A, s, ab in verified:
        for B, s_p, ab_p in verified:
            if A.signature != B.signature:
                continue
            if A.size > caps.hom_src or B.size > caps.hom_tgt:
                continue
            for g in enumerate_homomorphisms(A, B):
                hom_checks += 1
                sub_ok = check_homomorphic(g, s, s_p)
                if not sub_ok.holds:
                    violations.append(
                        f"map {A.name}->{B.name} {list(g.mapping)} not homomorphic "
                        f"at {sub_ok.witness}")
                add_ok = all(g(ab.plus(x, y)) == ab_p.plus(g(x), g(y))
                             for x in range(A.size) for y in range(A.size))
                neg_ok = all(g(ab.minus(x)) == ab_p.minus(g(x)) for x in range(A.size))
                if not (add_ok and neg_ok):
                    violations.append(
                        f"map {A.name}->{B.name} {list(g.mapping)} not an "
                        f"abelian-group homomorphism")
    return CrystalReport(tuple(entries), hom_checks, tuple(violations))
