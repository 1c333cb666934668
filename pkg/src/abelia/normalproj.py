"""Normal-projection checks for pairs of finite pointed algebras.

The pair-level law says the congruence generated on A x B by collapsing
the B-axis slice {(a, 0)} to (0, 0) already relates every (a, b) to (0, b);
equivalently, every homomorphism f out of A x B killing the first inclusion
factors through the second projection.  check_np_pair decides this with one
congruence generation.  The remaining checks realize the elementwise
condition variants (tags b through e) over explicit finite families of
targets and parameter objects, plus two congruence-shaped implications that
must cohere with the pair-level verdict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import Caps, DEFAULT_CAPS
from .congruences import Congruence, all_congruences, cg
from .core import (CapExceeded, FiniteAlgebra, Homomorphism, ProductAlgebra,
                   SignatureMismatch, enumerate_homomorphisms, product)


@dataclass(frozen=True)
class NpVerdict:
    """holds iff witness is absent; theta is the generated congruence and is
    always contained in the kernel of the second projection."""

    holds: bool
    theta: Congruence
    witness: tuple[int, int] | None


@dataclass(frozen=True)
class ConditionFailure:
    """A re-verifiable counterexample: the cited maps, the element where the
    conclusion equation breaks, and the two unequal values."""

    maps: tuple[tuple[str, Homomorphism], ...]
    point: tuple[int, ...]
    lhs: int
    rhs: int
    theta: Congruence | None = None


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    instances: int
    failures: tuple[ConditionFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def _np_generators(P: ProductAlgebra) -> list[tuple[int, int]]:
    return [(P.pair(a, 0), 0) for a in range(P.left.size)]


def _np_witness(P: ProductAlgebra, theta: Congruence) -> tuple[int, int] | None:
    for a in range(P.left.size):
        for b in range(P.right.size):
            if not theta.same(P.pair(a, b), P.pair(0, b)):
                return (a, b)
    return None


def check_np_pair(A: FiniteAlgebra, B: FiniteAlgebra,
                  caps: Caps | None = None) -> NpVerdict:
    """Decide the normal-projection law for the pair (A, B).

    Generates theta = cg({((a,0),(0,0))}) on A x B and tests whether every
    (a, b) lands with (0, b).  This settles the law against every possible
    target at once: a homomorphism killing the first inclusion has kernel
    containing theta, and the quotient by theta realizes the extreme case.
    """
    caps = caps or DEFAULT_CAPS
    P = product(A, B)
    theta = cg(P, _np_generators(P), caps)
    witness = _np_witness(P, theta)
    return NpVerdict(witness is None, theta, witness)


def _guard_hom(source_size: int, target_size: int, caps: Caps):
    if source_size > caps.hom_src:
        raise CapExceeded("homomorphism enumeration source", source_size, caps.hom_src)
    if target_size > caps.hom_tgt:
        raise CapExceeded("homomorphism enumeration target", target_size, caps.hom_tgt)


def check_condition_b(X: FiniteAlgebra, targets: list[FiniteAlgebra],
                      caps: Caps | None = None, tag: str = "b") -> ConditionReport:
    """Elementwise diagonal condition on X.

    For every homomorphism f: X x X -> C (over the listed targets) with
    f(x, 0) = 0 for all x, assert f(x, x) = f(0, x) for all x.  Tag "c" runs
    the identical elementwise form under its own label.
    """
    caps = caps or DEFAULT_CAPS
    P = product(X, X)
    instances = 0
    failures: list[ConditionFailure] = []
    pins = {P.pair(x, 0): 0 for x in range(X.size)}
    for C in targets:
        if C.signature != X.signature:
            raise SignatureMismatch(f"{C.name} does not share {X.name}'s signature")
        _guard_hom(P.size, C.size, caps)
        for f in enumerate_homomorphisms(P, C, pins):
            instances += 1
            for x in range(X.size):
                lhs = f(P.pair(x, x))
                rhs = f(P.pair(0, x))
                if lhs != rhs:
                    failures.append(ConditionFailure((("f", f),), (x,), lhs, rhs))
    return ConditionReport(tag, instances, tuple(failures))


def check_condition_d_instances(A: FiniteAlgebra, B: FiniteAlgebra,
                                targets: list[FiniteAlgebra],
                                parameter_objects: list[FiniteAlgebra],
                                caps: Caps | None = None) -> ConditionReport:
    """Generalized-element condition on the pair (A, B).

    For every f: A x B -> C and homomorphisms a: X -> A, b: X -> B from each
    parameter object, whenever f(a(x), 0) = 0 for all x, assert
    f(a(x), b(x)) = f(0, b(x)) for all x.  An instance is one (f, a, b)
    triple whose premise holds.
    """
    caps = caps or DEFAULT_CAPS
    P = product(A, B)
    instances = 0
    failures: list[ConditionFailure] = []
    for C in targets:
        if C.signature != A.signature:
            raise SignatureMismatch(f"{C.name} does not share {A.name}'s signature")
        _guard_hom(P.size, C.size, caps)
        for X in parameter_objects:
            if X.signature != A.signature:
                raise SignatureMismatch(f"{X.name} does not share {A.name}'s signature")
            _guard_hom(X.size, A.size, caps)
            _guard_hom(X.size, B.size, caps)
            a_maps = list(enumerate_homomorphisms(X, A))
            b_maps = list(enumerate_homomorphisms(X, B))
            for f in enumerate_homomorphisms(P, C):
                for a in a_maps:
                    if any(f(P.pair(a(x), 0)) != 0 for x in range(X.size)):
                        continue
                    for b in b_maps:
                        instances += 1
                        for x in range(X.size):
                            lhs = f(P.pair(a(x), b(x)))
                            rhs = f(P.pair(0, b(x)))
                            if lhs != rhs:
                                failures.append(ConditionFailure(
                                    (("f", f), ("a", a), ("b", b)), (x,), lhs, rhs))
    return ConditionReport("d", instances, tuple(failures))


def check_condition_e_instances(X: FiniteAlgebra, targets: list[FiniteAlgebra],
                                parameter_objects: list[FiniteAlgebra],
                                caps: Caps | None = None) -> ConditionReport:
    """The diagonal instance of the generalized-element condition.

    As condition d with A = B = X and a = b = x ranging over homomorphisms
    from each parameter object into X.
    """
    caps = caps or DEFAULT_CAPS
    P = product(X, X)
    instances = 0
    failures: list[ConditionFailure] = []
    for C in targets:
        if C.signature != X.signature:
            raise SignatureMismatch(f"{C.name} does not share {X.name}'s signature")
        _guard_hom(P.size, C.size, caps)
        for U in parameter_objects:
            if U.signature != X.signature:
                raise SignatureMismatch(f"{U.name} does not share {X.name}'s signature")
            _guard_hom(U.size, X.size, caps)
            u_maps = list(enumerate_homomorphisms(U, X))
            for f in enumerate_homomorphisms(P, C):
                for x in u_maps:
                    if any(f(P.pair(x(u), 0)) != 0 for u in range(U.size)):
                        continue
                    instances += 1
                    for u in range(U.size):
                        lhs = f(P.pair(x(u), x(u)))
                        rhs = f(P.pair(0, x(u)))
                        if lhs != rhs:
                            failures.append(ConditionFailure(
                                (("f", f), ("x", x)), (u,), lhs, rhs))
    return ConditionReport("e", instances, tuple(failures))


def shifting_shape_check(A: FiniteAlgebra, B: FiniteAlgebra,
                         caps: Caps | None = None) -> NpVerdict:
    """Decide the pair-level law by quantifying over the whole congruence
    lattice of A x B: every congruence collapsing the slice {(a, 0)} to the
    point must relate each (a, b) to (0, b).

    Agrees with check_np_pair by construction (the generated congruence is
    the finest one quantified over), but computes the verdict independently.
    The returned theta is the generated congruence, as in check_np_pair.
    """
    caps = caps or DEFAULT_CAPS
    P = product(A, B)
    if P.size > caps.lattice:
        raise CapExceeded("congruence lattice carrier", P.size, caps.lattice)
    theta_star = cg(P, _np_generators(P), caps)
    holds = True
    for theta in all_congruences(P, caps):
        if all(theta.same(P.pair(a, 0), 0) for a in range(A.size)):
            if _np_witness(P, theta) is not None:
                holds = False
                break
    witness = _np_witness(P, theta_star) if not holds else None
    return NpVerdict(holds, theta_star, witness)


def centralic_check(A: FiniteAlgebra, B: FiniteAlgebra,
                    caps: Caps | None = None) -> ConditionReport:
    """Translation-invariance of slice collapses, over every congruence.

    For each congruence theta of A x B and elements x, y of A, z of B:
    (x, 0) theta (y, 0) must imply (x, z) theta (y, z).  Reports every
    violating (theta, x, y, z); lhs and rhs are the block representatives
    of (x, z) and (y, z).  Passing implies the pair-level law.
    """
    caps = caps or DEFAULT_CAPS
    P = product(A, B)
    if P.size > caps.lattice:
        raise CapExceeded("congruence lattice carrier", P.size, caps.lattice)
    instances = 0
    failures: list[ConditionFailure] = []
    for theta in all_congruences(P, caps):
        for x in range(A.size):
            for y in range(A.size):
                if not theta.same(P.pair(x, 0), P.pair(y, 0)):
                    continue
                for z in range(B.size):
                    instances += 1
                    u, v = P.pair(x, z), P.pair(y, z)
                    if not theta.same(u, v):
                        failures.append(ConditionFailure(
                            (), (x, y, z), theta.rep[u], theta.rep[v], theta))
    return ConditionReport("centralic", instances, tuple(failures))


@dataclass(frozen=True)
class PairCrossCheck:
    """Per-pair verdicts; None marks a sub-check skipped for caps."""

    left: str
    right: str
    np_holds: bool
    shifting_holds: bool | None
    centralic_ok: bool | None
    d_instances: int
    d_failures: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class CrossCheckReport:
    pairs: tuple[PairCrossCheck, ...]
    discrepancies: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


def cross_check_conditions(catalog: list[FiniteAlgebra],
                           parameter_objects: list[FiniteAlgebra] | None = None,
                           targets: list[FiniteAlgebra] | None = None,
                           caps: Caps | None = None) -> CrossCheckReport:
    """Check the implication web between the condition variants.

    On every same-signature pair within caps: the lattice-quantified check
    must agree with the generated-congruence check; a centralic pass must
    come with the pair-level law; and when the law holds for the pair, no
    generalized-element instance with a parameter object X whose own
    diagonal law holds may fail.  Sub-checks beyond caps are skipped, not
    failed.
    """
    caps = caps or DEFAULT_CAPS
    params = parameter_objects if parameter_objects is not None else list(catalog)
    target_pool = targets if targets is not None else list(catalog)
    np_self: dict[int, bool] = {}

    def self_holds(X: FiniteAlgebra) -> bool:
        key = id(X)
        if key not in np_self:
            np_self[key] = check_np_pair(X, X, caps).holds
        return np_self[key]

    pairs: list[PairCrossCheck] = []
    discrepancies: list[str] = []
    ordered = sorted(catalog, key=lambda X: X.name)
    for A in ordered:
        for B in ordered:
            if A.signature != B.signature:
                continue
            P_size = A.size * B.size
            if P_size > caps.cg:
                continue
            np = check_np_pair(A, B, caps)
            shifting = centralic = None
            if P_size <= caps.lattice:
                shifting = shifting_shape_check(A, B, caps).holds
                if shifting != np.holds:
                    discrepancies.append(
                        f"lattice and generated-congruence checks disagree on ({A.name}, {B.name})")
                centralic = centralic_check(A, B, caps).ok
                if centralic and not np.holds:
                    discrepancies.append(
                        f"centralic passes but the pair law fails on ({A.name}, {B.name})")
            d_instances = 0
            d_failures: list[tuple[str, int]] = []
            if np.holds and P_size <= caps.hom_src:
                usable_targets = [C for C in target_pool
                                  if C.signature == A.signature and C.size <= caps.hom_tgt]
                for X in params:
                    if X.signature != A.signature:
                        continue
                    if (X.size > caps.hom_src or A.size > caps.hom_tgt
                            or B.size > caps.hom_tgt):
                        continue
                    report = check_condition_d_instances(A, B, usable_targets, [X], caps)
                    d_instances += report.instances
                    if report.failures:
                        d_failures.append((X.name, len(report.failures)))
                        if self_holds(X):
                            discrepancies.append(
                                f"generalized-element failure on ({A.name}, {B.name}) "
                                f"with parameter {X.name} though its diagonal law holds")
            pairs.append(PairCrossCheck(A.name, B.name, np.holds, shifting,
                                        centralic, d_instances, tuple(d_failures)))
    return CrossCheckReport(tuple(pairs), tuple(discrepancies))
