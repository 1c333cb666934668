import pytest

from abelia import (Caps, CapExceeded, Congruence, all_congruences, cg,
                    identity_hom, join, kernel_congruence, meet, product,
                    quotient, zero_hom)
from oracles import BELL, congruence_reps_by_filter, partition_compatible


def test_congruence_canonical_form():
    with pytest.raises(ValueError):
        Congruence(3, (0, 1))
    with pytest.raises(ValueError):
        Congruence(3, (0, 2, 2))  # rep must be the least member
    with pytest.raises(ValueError):
        Congruence(3, (1, 1, 2))
    theta = Congruence(4, (0, 1, 0, 1))
    assert theta.same(0, 2) and not theta.same(0, 1)
    assert theta.num_blocks == 2
    assert theta.blocks() == [[0, 2], [1, 3]]


def test_from_blocks_round_trip():
    theta = Congruence.from_blocks(5, [[3, 0], [1, 4], [2]])
    assert theta.rep == (0, 1, 2, 0, 1)
    assert Congruence.from_blocks(5, theta.blocks()) == theta
    with pytest.raises(ValueError):
        Congruence.from_blocks(3, [[0, 1]])
    with pytest.raises(ValueError):
        Congruence.from_blocks(3, [[0, 1], [1, 2]])


def test_discrete_and_all_pairs():
    assert Congruence.discrete(3).num_blocks == 3
    assert Congruence.all_pairs(3).num_blocks == 1
    assert Congruence.all_pairs(3).contains(Congruence.discrete(3))
    assert not Congruence.discrete(3).contains(Congruence.all_pairs(3))


@pytest.mark.parametrize("name,pairs", [
    ("Z4", [(0, 2)]),
    ("Z4", [(0, 1)]),
    ("Z3", [(1, 2)]),
    ("S2", [(0, 1)]),
    ("V4", [(1, 2)]),
])
def test_cg_is_least_compatible(cat, name, pairs):
    A = cat[name]
    theta = cg(A, pairs)
    assert partition_compatible(A, theta.rep)
    for x, y in pairs:
        assert theta.same(x, y)
    # least: every compatible partition containing the pairs contains theta
    for rep in congruence_reps_by_filter(A):
        other = Congruence(A.size, rep)
        if all(other.same(x, y) for x, y in pairs):
            assert other.contains(theta)


def test_cg_translation_in_groups(cat):
    # collapsing 0 with 2 in Z4 drags every coset pair along
    theta = cg(cat["Z4"], [(0, 2)])
    assert theta.rep == (0, 1, 0, 1)
    theta = cg(cat["Z4"], [(1, 2)])
    assert theta.num_blocks == 1


def test_cg_generators_validated(cat):
    with pytest.raises(ValueError):
        cg(cat["Z3"], [(0, 3)])
    with pytest.raises(CapExceeded):
        cg(cat["Z3"], [(0, 1)], Caps(cg=2))


def test_cg_empty_is_discrete(cat):
    assert cg(cat["Z4"], []) == Congruence.discrete(4)


def test_kernel_congruence(cat):
    Z4, Z2 = cat["Z4"], cat["Z2"]
    from abelia import Homomorphism
    parity = Homomorphism(Z4, Z2, (0, 1, 0, 1))
    assert kernel_congruence(parity).rep == (0, 1, 0, 1)
    assert kernel_congruence(identity_hom(Z4)) == Congruence.discrete(4)
    assert kernel_congruence(zero_hom(Z4, Z4)) == Congruence.all_pairs(4)


def test_join_meet_lattice_laws(cat):
    A = cat["Z4"]
    lattice = all_congruences(A)
    for t1 in lattice:
        for t2 in lattice:
            up = join(A, t1, t2)
            down = meet(t1, t2)
            assert up.contains(t1) and up.contains(t2)
            assert t1.contains(down) and t2.contains(down)
            assert partition_compatible(A, up.rep)
            assert partition_compatible(A, down.rep)
    with pytest.raises(ValueError):
        meet(Congruence.discrete(3), Congruence.discrete(4))


def test_quotient_of_join_collapses_both(cat):
    A = cat["V4"]
    t1 = cg(A, [(0, 1)])
    t2 = cg(A, [(0, 2)])
    up = join(A, t1, t2)
    Q, q = quotient(A, up)
    assert Q.size == 1


# acceptance criterion 9: the four-element group product has 5 congruences
def test_klein_product_lattice(cat):
    P = product(cat["Z2"], cat["Z2"])
    lattice = all_congruences(P)
    assert len(lattice) == 5
    reps = {theta.rep for theta in lattice}
    assert reps == {tuple(r) for r in congruence_reps_by_filter(P)}


@pytest.mark.parametrize("build", [
    lambda cat: cat["Z2"],
    lambda cat: cat["Z3"],
    lambda cat: cat["Z4"],
    lambda cat: cat["S2"],
    lambda cat: cat["B2"],
    lambda cat: product(cat["S2"], cat["S2"]),
    lambda cat: product(cat["P2"], cat["P3"]),
    lambda cat: product(cat["Z2"], cat["Z3"]),
    lambda cat: product(cat["B2"], cat["B2"]),
])
def test_all_congruences_matches_partition_filter(cat, build):
    A = build(cat)
    assert A.size <= 6
    got = [theta.rep for theta in all_congruences(A)]
    assert sorted(got) == sorted(tuple(r) for r in congruence_reps_by_filter(A))
    assert len(set(got)) == len(got)


def test_all_congruences_order(cat):
    lattice = all_congruences(product(cat["P2"], cat["P2"]))
    # pointed sets: every partition is a congruence
    assert len(lattice) == BELL[4]
    keys = [(-theta.num_blocks, theta.rep) for theta in lattice]
    assert keys == sorted(keys)
    assert lattice[0] == Congruence.discrete(4)
    assert lattice[-1] == Congruence.all_pairs(4)


def test_all_congruences_cap(cat):
    big = product(cat["Z4"], cat["Z4"])
    with pytest.raises(CapExceeded):
        all_congruences(big)
    assert len(all_congruences(big, Caps(lattice=16))) > 1


def test_lattice_memoization_returns_copies(cat):
    first = all_congruences(cat["Z4"])
    second = all_congruences(cat["Z4"])
    assert first == second
    first.pop()
    assert len(all_congruences(cat["Z4"])) == len(second)
