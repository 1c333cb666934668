"""Built-in fixture algebras with expected analysis outcomes.

The eight fixtures span the landscape the analyses care about: cyclic and
Klein-four groups (projection law holds, unique subtraction, abelian), a
two-element algebra whose basic operation is a subtraction term (law holds,
yet no internal subtraction), a meet-semilattice and two bare pointed sets
(law fails, with instructive anomalies).  Every expectation records the
expected value together with a note saying where it comes from; the test
suite re-derives each one by running the named check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AbeliaError, FiniteAlgebra, POINTED, Signature, op_table

GROUP = Signature.make((("add", 2), ("neg", 1)))
SEMILATTICE = Signature.make((("meet", 2),))
SUBTRACTION = Signature.make((("s", 2),))


def _pointed(n: int, name: str) -> FiniteAlgebra:
    return FiniteAlgebra(name, n, POINTED, {"zero": (0,)})


def _cyclic(n: int, name: str) -> FiniteAlgebra:
    tables = {"zero": (0,),
              "add": op_table(n, 2, lambda x, y: (x + y) % n),
              "neg": op_table(n, 1, lambda x: (-x) % n)}
    return FiniteAlgebra(name, n, GROUP, tables)


def _klein() -> FiniteAlgebra:
    # Two-bit vectors under XOR; every element is its own inverse.
    tables = {"zero": (0,),
              "add": op_table(4, 2, lambda x, y: x ^ y),
              "neg": op_table(4, 1, lambda x: x)}
    return FiniteAlgebra("V4", 4, GROUP, tables)


def _semilattice() -> FiniteAlgebra:
    tables = {"zero": (0,), "meet": op_table(2, 2, min)}
    return FiniteAlgebra("S2", 2, SEMILATTICE, tables)


def _subtraction_algebra() -> FiniteAlgebra:
    tables = {"zero": (0,),
              "s": op_table(2, 2, lambda x, y: int(x == 1 and y == 0))}
    return FiniteAlgebra("B2", 2, SUBTRACTION, tables)


@dataclass(frozen=True)
class Fixture:
    """expectations maps a check name to (expected value, provenance note)."""

    name: str
    algebra: FiniteAlgebra
    expectations: dict[str, tuple[object, str]]


def _fixtures() -> dict[str, Fixture]:
    out: dict[str, Fixture] = {}

    def add(name: str, algebra: FiniteAlgebra, expectations):
        out[name] = Fixture(name, algebra, expectations)

    add("P2", _pointed(2, "P2"), {
        "np_self": (False, "no operations can relate (1,1) to (0,1) once (1,0) collapses"),
        "internal_subtractions": (2, "one free table cell s(0,1); both fillings are pointed maps"),
        "subtraction_term": ("none", "the clone holds only projections and zero"),
        "unit_term": ("none", "the clone holds only projections and zero"),
    })
    add("P3", _pointed(3, "P3"), {
        "np_self": (False, "same slice-collapse failure as P2, at (1,1)"),
        "internal_subtractions": (81, "four free table cells over three values"),
        "subtraction_term": ("none", "the clone holds only projections and zero"),
        "unit_term": ("none", "the clone holds only projections and zero"),
    })
    add("S2", _semilattice(), {
        "np_self": (False, "meet propagation never merges (1,1) with (0,1)"),
        "internal_subtractions": (0, "s(1,1)=0 with s(1,0)=1 breaks meet preservation"),
        "subtraction_term": ("none", "binary clone part is {0, x, y, x meet y}, none qualifies"),
        "unit_term": ("none", "every candidate sends (x,0) or (0,x) to 0"),
    })
    add("B2", _subtraction_algebra(), {
        "np_self": (True, "the basic operation is a subtraction term, which forces the law"),
        "internal_subtractions": (0, "x and-not y is not a homomorphism from the product"),
        "subtraction_term": ("found", "the basic operation itself, s(x1, x2)"),
        "unit_term": ("none", "every term preserves the relation avoiding (1,1), so p(1,0)=p(0,1)=1 is impossible"),
    })
    add("Z2", _cyclic(2, "Z2"), {
        "np_self": (True, "group translation moves the collapsed slice across every fibre"),
        "internal_subtractions": (1, "bilinearity forces s(x,y) = x - y"),
        "subtraction_term": ("found", "x - y, here add(x1, x2) since -1 = 1"),
        "unit_term": ("found", "the group addition"),
        "abelian": (True, "derived addition is the group's own"),
    })
    add("Z3", _cyclic(3, "Z3"), {
        "np_self": (True, "group translation moves the collapsed slice across every fibre"),
        "internal_subtractions": (1, "bilinearity forces s(x,y) = x - y"),
        "subtraction_term": ("found", "x - y realized as add(x1, neg(x2))"),
        "unit_term": ("found", "the group addition"),
        "abelian": (True, "derived addition is the group's own"),
    })
    add("Z4", _cyclic(4, "Z4"), {
        "np_self": (True, "group translation moves the collapsed slice across every fibre"),
        "internal_subtractions": (1, "bilinearity forces s(x,y) = x - y"),
        "subtraction_term": ("found", "x - y realized as add(x1, neg(x2))"),
        "unit_term": ("found", "the group addition"),
        "abelian": (True, "derived addition is the group's own"),
    })
    add("V4", _klein(), {
        "np_self": (True, "group translation moves the collapsed slice across every fibre"),
        "internal_subtractions": (1, "bilinearity forces s(x,y) = x + y"),
        "subtraction_term": ("found", "x + y doubles as x - y in exponent two"),
        "unit_term": ("found", "the group addition"),
        "abelian": (True, "derived addition is the group's own"),
    })
    return out


_FIXTURES = _fixtures()


def list_builtins() -> list[str]:
    return sorted(_FIXTURES)


def builtin(name: str) -> Fixture:
    fixture = _FIXTURES.get(name)
    if fixture is None:
        raise AbeliaError(
            f"unknown builtin {name!r}; available: {', '.join(list_builtins())}")
    return fixture
