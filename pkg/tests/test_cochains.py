import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from posetbundle.cochains import (
    Cochain0,
    Cochain1,
    Cochain2,
    associated_cocycle,
    are_equivalent,
    classify_cocycles,
    coboundary,
    coboundary0,
    coboundary1,
    coboundary2,
    coboundary_from_assignment,
    enumerate_cocycles,
    enumerate_cocycles_raw,
    extend_to_path,
    find_morphism,
    format_assignment_text,
    format_cochain_text,
    is_cocycle,
    is_morphism,
    is_path_independent,
    cocycle_violations,
    parse_assignment_text,
    parse_cochain_text,
    pushforward,
    random_cochain0,
    random_cochain1,
    trivial_cochain1,
)
from posetbundle.errors import (
    BadParameter,
    CentralityViolation,
    Mismatch,
    MissingValue,
    SearchLimitExceeded,
)
from posetbundle.groups import GroupHom, ad, cyclic_group, symmetric_group
from posetbundle.paths import Path, compose, pi1_presentation, reverse_path
from posetbundle.simplicial import (
    Simplex0,
    Simplex1,
    boundary,
    enumerate_simplices,
)

Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
S3 = symmetric_group(3)


def all_cochain1(P, G):
    simplices = enumerate_simplices(P, 1)
    for values in itertools.product(G.elements, repeat=len(simplices)):
        yield Cochain1(P, G, dict(zip(simplices, values)))


def test_totality_is_checked(posets):
    P = posets["chain2"]
    with pytest.raises(MissingValue):
        Cochain1(P, Z2, {})
    b = enumerate_simplices(P, 1)[0]
    full = {d: "g0" for d in enumerate_simplices(P, 1)}
    full[b] = "nope"
    with pytest.raises(MissingValue):
        Cochain1(P, Z2, full)


def test_coboundary0_formula(posets):
    P = posets["circle2"]
    rng = random.Random(5)
    v = random_cochain0(P, Z3, rng)
    dv = coboundary0(v)
    for b in enumerate_simplices(P, 1):
        assert dv(b) == Z3.mul(v(b.face0), Z3.inv(v(b.face1)))
    assert is_cocycle(dv)
    assert coboundary(v) == dv


def test_coboundary1_formula(posets):
    P = posets["circle2"]
    rng = random.Random(6)
    u = random_cochain1(P, S3, rng)
    du = coboundary1(u)
    for c in enumerate_simplices(P, 2)[:40]:
        assert du(c) == S3.product(u(c.face0), u(c.face2), S3.inv(u(c.face1)))
        assert du.tau[c.face1] == ad(S3, u(c.face1))


def test_second_coboundary_vanishes(posets):
    P = posets["circle2"]
    rng = random.Random(7)
    for _ in range(5):
        u = random_cochain1(P, S3, rng)
        ddu = coboundary2(coboundary1(u))
        assert all(g == S3.identity for g in ddu.values.values())
    with pytest.raises(BadParameter):
        coboundary(ddu)


def test_cochain2_intertwining_guard(posets):
    P = posets["circle2"]
    u = trivial_cochain1(P, S3)
    tau = {b: ad(S3, "231") for b in enumerate_simplices(P, 1)}
    values = {c: S3.identity for c in enumerate_simplices(P, 2)}
    with pytest.raises(Mismatch):
        Cochain2(P, S3, tau, values)
    del u


def test_cochain3_centrality_guard(posets):
    P = posets["chain3"]
    w = coboundary1(trivial_cochain1(P, S3))
    dw = coboundary2(w)
    bad = dict(dw.values)
    d = next(iter(bad))
    bad[d] = "213"
    from posetbundle.cochains import Cochain3

    with pytest.raises(CentralityViolation):
        Cochain3(P, S3, dw.tau, bad)


def test_cocycle_enumeration_matches_oracle(posets):
    cases = [
        (posets["chain2"], Z2),
        (posets["chain2"], Z3),
        (posets["vee"], Z2),
    ]
    for P, G in cases:
        fast = set(enumerate_cocycles(P, G))
        raw = set(enumerate_cocycles_raw(P, G))
        assert fast == raw
    with pytest.raises(SearchLimitExceeded):
        enumerate_cocycles_raw(posets["circle2"], Z2, limit=100)


def test_cocycle_count_on_circle(posets):
    assert len(enumerate_cocycles(posets["circle2"], Z2)) == 16


def test_classification_counts(posets):
    P = posets["circle2"]
    assert len(classify_cocycles(P, Z2)) == 2
    assert len(classify_cocycles(P, Z3)) == 3
    assert len(classify_cocycles(P, S3)) == 3
    assert len(classify_cocycles(posets["chain3"], S3)) == 1
    assert len(classify_cocycles(posets["vee"], Z3)) == 1


def test_class_representatives_are_inequivalent(posets):
    reps = classify_cocycles(posets["circle2"], Z3)
    for i, z in enumerate(reps):
        assert is_cocycle(z)
        assert are_equivalent(z, z)
        for z1 in reps[i + 1:]:
            assert not are_equivalent(z, z1)


def test_every_cocycle_is_equivalent_to_a_representative(posets):
    P = posets["circle2"]
    reps = classify_cocycles(P, Z2)
    for z in enumerate_cocycles(P, Z2):
        assert sum(1 for r in reps if are_equivalent(z, r)) == 1


def test_path_independence_is_the_coboundary_condition(posets):
    P = posets["chain2"]
    coboundaries = set()
    for choice in itertools.product(Z2.elements, repeat=len(P)):
        f = dict(zip(P.elements, choice))
        coboundaries.add(coboundary_from_assignment(P, Z2, f))
    for u in all_cochain1(P, Z2):
        witness = is_path_independent(u)
        assert (witness is not None) == (u in coboundaries)
        if witness is not None:
            assert coboundary0(witness) == u


def test_extension_is_multiplicative(posets):
    P = posets["circle2"]
    rng = random.Random(8)
    u = random_cochain1(P, S3, rng)
    b1 = Simplex1("o1", Simplex0("o1"), Simplex0("a1"))
    p = Path((b1,))
    q = reverse_path(p)
    loop = compose(q, p)
    assert extend_to_path(u, loop) == S3.mul(
        extend_to_path(u, q), extend_to_path(u, p)
    )


def test_morphism_condition(posets):
    P = posets["circle2"]
    z = enumerate_cocycles(P, Z3)[5]
    m = find_morphism(z, z)
    assert m is not None and is_morphism(m.as_dict(), z, z)
    for b in enumerate_simplices(P, 1):
        assert Z3.mul(m(b.face0.element), z(b)) == Z3.mul(z(b), m(b.face1.element))
    with pytest.raises(Mismatch):
        find_morphism(z, trivial_cochain1(posets["chain2"], Z3))


def test_morphisms_transport_the_cocycle_identity(posets):
    P = posets["circle2"]
    cocycles = enumerate_cocycles(P, Z2)
    z = cocycles[0]
    partners = [z1 for z1 in cocycles if find_morphism(z, z1) is not None]
    for z1 in partners:
        m = find_morphism(z, z1)
        assert is_morphism(m.as_dict(), z, z1)


def test_pushforward_and_associated(posets):
    P = posets["circle2"]
    sign = GroupHom.from_dict(
        S3, Z2,
        {g: ("g0" if g in ("123", "231", "312") else "g1") for g in S3.elements},
    )
    z = classify_cocycles(P, S3)[-1]
    out = associated_cocycle(z, sign)
    assert out.group == Z2 and is_cocycle(out)
    assert out == pushforward(sign, z)
    with pytest.raises(Mismatch):
        pushforward(sign, trivial_cochain1(P, Z2))
    rng = random.Random(9)
    non = random_cochain1(P, S3, rng)
    while is_cocycle(non):
        non = random_cochain1(P, S3, rng)
    with pytest.raises(Mismatch):
        associated_cocycle(non, sign)


def test_cocycle_violation_reporting(posets):
    P = posets["circle2"]
    rng = random.Random(10)
    non = random_cochain1(P, Z2, rng)
    while is_cocycle(non):
        non = random_cochain1(P, Z2, rng)
    bad = cocycle_violations(non)
    assert bad
    for c in bad:
        assert Z2.mul(non(c.face0), non(c.face2)) != non(c.face1)
    assert cocycle_violations(trivial_cochain1(P, Z2)) == ()


def test_cochain_text_round_trip(posets):
    P = posets["circle2"]
    rng = random.Random(11)
    u = random_cochain1(P, S3, rng)
    text = format_cochain_text(u, name="sample")
    assert parse_cochain_text(text, P, S3) == u
    with pytest.raises(Mismatch):
        parse_cochain_text(text, posets["chain2"], S3)
    with pytest.raises(Mismatch):
        parse_cochain_text(text, P, Z2)
    with pytest.raises(BadParameter):
        parse_cochain_text("not a header\n", P, S3)


def test_assignment_text_round_trip(posets):
    P = posets["circle2"]
    f = {a: "g1" for a in P.elements}
    assert parse_assignment_text(format_assignment_text(f), P, Z3) == f
    with pytest.raises(MissingValue):
        parse_assignment_text("a1 = g1\n", P, Z3)
    with pytest.raises(MissingValue):
        parse_assignment_text(
            "\n".join(f"{a} = bogus" for a in P.elements), P, Z3
        )


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_coboundaries_are_cocycles(rng):
    from posetbundle.poset import generate

    P = generate("circle", 2)
    v = random_cochain0(P, S3, rng)
    assert is_path_independent(coboundary0(v)) is not None


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_cochain0_at_matches_call(rng):
    from posetbundle.poset import generate

    P = generate("vee", 1)
    v = random_cochain0(P, Z3, rng)
    for a in enumerate_simplices(P, 0):
        assert v.at(a.element) == v(a)
