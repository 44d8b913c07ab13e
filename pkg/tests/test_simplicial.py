import itertools

import pytest

from posetbundle.errors import BadParameter, IndexOutOfRange, UnsupportedDimension
from posetbundle.simplicial import (
    EVEN_PERMUTATIONS,
    ODD_PERMUTATIONS,
    Simplex0,
    Simplex1,
    Simplex2,
    boundary,
    degeneracy,
    enumerate_simplices,
    is_degenerate,
    is_inflating,
    parse_simplex1,
    permute2,
    reverse,
    support,
    validate_supports,
)

# Frozen simplex counts for the fixture posets.
FROZEN_COUNTS = {
    ("chain2", 1): 5,
    ("chain3", 1): 14,
    ("vee", 1): 11,
    ("circle2", 0): 4,
    ("circle2", 1): 20,
    ("circle2", 2): 108,
    ("circle2", 3): 976,
}


@pytest.mark.parametrize("poset_name,dim", sorted(FROZEN_COUNTS))
def test_frozen_counts(posets, poset_name, dim):
    P = posets[poset_name]
    assert len(enumerate_simplices(P, dim)) == FROZEN_COUNTS[(poset_name, dim)]


def test_dimension_range(posets):
    with pytest.raises(UnsupportedDimension):
        enumerate_simplices(posets["chain2"], 4)
    with pytest.raises(UnsupportedDimension):
        enumerate_simplices(posets["chain2"], -1)


def test_enumeration_is_sorted_and_duplicate_free(posets):
    for dim in range(3):
        simplices = enumerate_simplices(posets["circle2"], dim)
        keys = [d.sort_key() for d in simplices]
        assert keys == sorted(keys)
        assert len(set(simplices)) == len(simplices)


def test_supports_validate(posets):
    P = posets["circle2"]
    for dim in range(4):
        for d in enumerate_simplices(P, dim)[:50]:
            assert validate_supports(P, d)
    fake = Simplex1("a1", Simplex0("o1"), Simplex0("a1"))
    assert not validate_supports(P, fake)


def test_face_compatibility_enforced():
    a, b, o = Simplex0("a"), Simplex0("b"), Simplex0("o")
    ab = Simplex1("o", b, a)
    with pytest.raises(BadParameter):
        Simplex2("o", ab, ab, ab)  # faces cannot chain


def test_boundary_indices(posets):
    b = enumerate_simplices(posets["chain2"], 1)[0]
    with pytest.raises(IndexOutOfRange):
        boundary(b, 2)
    with pytest.raises(IndexOutOfRange):
        boundary(Simplex0("x1"), 0)


def test_simplicial_identities_on_degeneracies(posets):
    P = posets["circle2"]
    for b in enumerate_simplices(P, 1):
        # d_i s_0 and d_i s_1 of a 1-simplex
        s0, s1 = degeneracy(b, 0), degeneracy(b, 1)
        assert boundary(s0, 0) == b and boundary(s0, 1) == b
        assert boundary(s0, 2) == degeneracy(b.face1, 0)
        assert boundary(s1, 1) == b and boundary(s1, 2) == b
        assert boundary(s1, 0) == degeneracy(b.face0, 0)
        assert is_degenerate(s0) and is_degenerate(s1)
        assert support(s0) == b.support
    for c in enumerate_simplices(P, 2)[:25]:
        for i in range(3):
            d = degeneracy(c, i)
            assert boundary(d, i) == c and boundary(d, i + 1) == c
            assert is_degenerate(d)


def test_degeneracy_index_range():
    a = Simplex0("x")
    with pytest.raises(IndexOutOfRange):
        degeneracy(a, 1)
    with pytest.raises(IndexOutOfRange):
        degeneracy(degeneracy(a, 0), 2)


def test_nondegenerate_edges(posets):
    P = posets["circle2"]
    for b in enumerate_simplices(P, 1):
        expected = b.face0 == b.face1 and b.face0.element == b.support
        assert is_degenerate(b) == expected


def test_reverse_is_an_involution(posets):
    for b in enumerate_simplices(posets["circle2"], 1):
        assert reverse(reverse(b)) == b
        assert reverse(b).support == b.support


def test_inflating_criterion(posets):
    P = posets["circle2"]
    for b in enumerate_simplices(P, 1):
        assert is_inflating(P, b) == P.leq(b.face1.element, b.face0.element)
    filtered = enumerate_simplices(P, 2, inflating_only=True)
    oracle = tuple(
        c for c in enumerate_simplices(P, 2) if is_inflating(P, c)
    )
    assert filtered == oracle


def test_permute2_is_a_right_action(posets):
    perms = EVEN_PERMUTATIONS + ODD_PERMUTATIONS
    sample = enumerate_simplices(posets["circle2"], 2)[::17]
    for c in sample:
        assert permute2(c, (0, 1, 2)) == c
        for sigma, tau in itertools.product(perms, repeat=2):
            composite = tuple(sigma[tau[k]] for k in range(3))
            assert permute2(permute2(c, sigma), tau) == permute2(c, composite)


def test_permute2_rejects_non_permutations(posets):
    c = enumerate_simplices(posets["circle2"], 2)[0]
    with pytest.raises(BadParameter):
        permute2(c, (0, 0, 1))


def test_parse_simplex1_round_trip(posets):
    for b in enumerate_simplices(posets["circle2"], 1):
        assert parse_simplex1(b.encode()) == b
    with pytest.raises(BadParameter):
        parse_simplex1("o1;a1,a2")
    with pytest.raises(BadParameter):
        parse_simplex1("(o1;a1)")
