import random

import pytest

from posetbundle.acceptance import full_image_cocycle, winding_cocycle
from posetbundle.cochains import trivial_cochain1
from posetbundle.connections import (
    construct_nonflat,
    curvature,
    enumerate_connections,
    induced_cocycle,
    is_connection,
)
from posetbundle.errors import Mismatch, WrongCocycle
from posetbundle.gauge import (
    GaugeTransformation,
    gauge_act,
    gauge_group,
    gauge_group_raw,
    is_gauge_transformation,
)
from posetbundle.groups import cyclic_group, symmetric_group
from posetbundle.simplicial import enumerate_simplices

Z2 = cyclic_group(2)
Z3 = cyclic_group(3)
S3 = symmetric_group(3)


def test_gauge_group_sizes(posets):
    assert len(gauge_group(trivial_cochain1(posets["circle2"], S3))) == 6
    assert len(gauge_group(winding_cocycle(posets["circle2"], Z3, "g1"))) == 3
    assert len(gauge_group(full_image_cocycle(posets["twoloop"], S3))) == 1


def test_gauge_group_matches_oracle(posets):
    P = posets["circle2"]
    for z in (
        trivial_cochain1(P, Z2),
        winding_cocycle(P, Z2, "g1"),
        winding_cocycle(P, S3, "213"),
    ):
        assert set(gauge_group(z)) == set(gauge_group_raw(z))


def test_gauge_group_is_a_group(posets):
    z = winding_cocycle(posets["circle2"], S3, "231")
    gg = gauge_group(z)
    identity = next(
        f for f in gg
        if all(g == S3.identity for _, g in f.assignment)
    )
    for f in gg:
        assert is_gauge_transformation(z, f.as_dict())
        assert f.compose(f.inverse()) == identity
        for g in gg:
            assert f.compose(g) in gg


def test_wrong_cocycle_rejected(posets):
    P = posets["circle2"]
    from posetbundle.cochains import Cochain1

    non = Cochain1(P, Z2, {b: "g1" for b in enumerate_simplices(P, 1)})
    with pytest.raises(WrongCocycle):
        gauge_group(non)


def test_mixed_bundles_rejected(posets):
    P = posets["circle2"]
    f = gauge_group(trivial_cochain1(P, S3))[1]
    g = gauge_group(winding_cocycle(P, S3, "231"))[0]
    with pytest.raises(Mismatch):
        f.compose(g)


def test_gauge_action_on_connections(posets):
    P = posets["circle2"]
    z = winding_cocycle(P, Z3, "g1")
    u, _ = construct_nonflat(z, g="g1")
    for f in gauge_group(z):
        out = gauge_act(f, u)
        assert is_connection(out)
        # the bundle moves by the same action
        assert induced_cocycle(out) == gauge_act(f, z)
        # a gauge transformation of z fixes z itself
        assert gauge_act(f, z) == z
        # curvature transforms by conjugation at the last vertex
        w, w1 = curvature(u), curvature(out)
        for c in enumerate_simplices(P, 2):
            v2 = c.face0.face0.element
            assert w1(c) == Z3.product(f(v2), w(c), Z3.inv(f(v2)))


def test_gauge_action_conjugates_curvature_nonabelian(posets):
    P = posets["circle2"]
    z = trivial_cochain1(P, S3)
    u, _ = construct_nonflat(z, g="213")
    w = curvature(u)
    for f in gauge_group(z):
        out = gauge_act(f, u)
        assert is_connection(out)
        w1 = curvature(out)
        for c in enumerate_simplices(P, 2):
            v2 = c.face0.face0.element
            assert w1(c) == S3.product(f(v2), w(c), S3.inv(f(v2)))


def test_gauge_action_is_an_action(posets):
    P = posets["circle2"]
    rng = random.Random(12)
    z = winding_cocycle(P, S3, "213")
    gg = gauge_group(z)
    u = z
    for _ in range(5):
        f = rng.choice(gg)
        g = rng.choice(gg)
        assert gauge_act(f, gauge_act(g, u)) == gauge_act(f.compose(g), u)


def test_gauge_act_accepts_plain_mappings(posets):
    P = posets["chain3"]
    u = trivial_cochain1(P, Z3)
    mapping = {a: "g1" for a in P.elements}
    assert gauge_act(mapping, u) == u  # constant map conjugates trivially
