"""Singular simplices of a poset up to dimension 3.

A simplex is a support element together with compatible faces; this is
the finite normal form of an order-preserving map from the subset-poset
of {0..n} into the base poset.  Equality is structural.  Vertex i of a
1-simplex b is read as: boundary 1 is the start point, boundary 0 the
endpoint.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import BadParameter, IndexOutOfRange, UnsupportedDimension
from .poset import Poset


@dataclass(frozen=True)
class Simplex0:
    element: str

    @property
    def dim(self):
        return 0

    def encode(self):
        return self.element

    def sort_key(self):
        return (self.element,)


@dataclass(frozen=True)
class Simplex1:
    support: str
    face0: Simplex0  # endpoint
    face1: Simplex0  # start point

    @property
    def dim(self):
        return 1

    def encode(self):
        return f"({self.support};{self.face0.encode()},{self.face1.encode()})"

    def sort_key(self):
        return (self.support, self.face0.sort_key(), self.face1.sort_key())


@dataclass(frozen=True)
class Simplex2:
    support: str
    face0: Simplex1
    face1: Simplex1
    face2: Simplex1

    def __post_init__(self):
        c0, c1, c2 = self.face0, self.face1, self.face2
        ok = (
            c0.face0 == c1.face0
            and c0.face1 == c2.face0
            and c1.face1 == c2.face1
        )
        if not ok:
            raise BadParameter(f"incompatible faces for 2-simplex: {c0}, {c1}, {c2}")

    @property
    def dim(self):
        return 2

    def encode(self):
        faces = ",".join(f.encode() for f in (self.face0, self.face1, self.face2))
        return f"({self.support};{faces})"

    def sort_key(self):
        return (
            self.support,
            self.face0.sort_key(),
            self.face1.sort_key(),
            self.face2.sort_key(),
        )


@dataclass(frozen=True)
class Simplex3:
    support: str
    face0: Simplex2
    face1: Simplex2
    face2: Simplex2
    face3: Simplex2

    def __post_init__(self):
        d0, d1, d2, d3 = self.face0, self.face1, self.face2, self.face3
        ok = (
            d0.face0 == d1.face0
            and d0.face1 == d2.face0
            and d0.face2 == d3.face0
            and d1.face1 == d2.face1
            and d1.face2 == d3.face1
            and d2.face2 == d3.face2
        )
        if not ok:
            raise BadParameter("incompatible faces for 3-simplex")

    @property
    def dim(self):
        return 3

    def encode(self):
        faces = ",".join(
            f.encode() for f in (self.face0, self.face1, self.face2, self.face3)
        )
        return f"({self.support};{faces})"

    def sort_key(self):
        return (
            self.support,
            self.face0.sort_key(),
            self.face1.sort_key(),
            self.face2.sort_key(),
            self.face3.sort_key(),
        )


def boundary(d, i):
    """The i-th face of a simplex of dimension >= 1."""
    if d.dim == 0:
        raise IndexOutOfRange("a 0-simplex has no boundary")
    if not 0 <= i <= d.dim:
        raise IndexOutOfRange(f"boundary index {i} out of range for dim {d.dim}")
    return (d.face0, d.face1, getattr(d, "face2", None), getattr(d, "face3", None))[i]


def support(d) -> str:
    return d.element if d.dim == 0 else d.support


def degeneracy(d, i):
    """The degenerate (n+1)-simplex s_i(d); supports are preserved."""
    if d.dim == 0:
        if i != 0:
            raise IndexOutOfRange("degeneracy index for a 0-simplex must be 0")
        return Simplex1(d.element, d, d)
    if d.dim == 1:
        if i == 0:
            return Simplex2(d.support, d, d, degeneracy(d.face1, 0))
        if i == 1:
            return Simplex2(d.support, degeneracy(d.face0, 0), d, d)
        raise IndexOutOfRange("degeneracy index for a 1-simplex must be 0 or 1")
    if d.dim == 2:
        if i == 0:
            return Simplex3(
                d.support, d, d, degeneracy(d.face1, 0), degeneracy(d.face2, 0)
            )
        if i == 1:
            return Simplex3(
                d.support, degeneracy(d.face0, 0), d, d, degeneracy(d.face2, 1)
            )
        if i == 2:
            return Simplex3(
                d.support, degeneracy(d.face0, 1), degeneracy(d.face1, 1), d, d
            )
        raise IndexOutOfRange("degeneracy index for a 2-simplex must be 0, 1 or 2")
    raise UnsupportedDimension("degeneracies are implemented for dimensions 0-2")


def is_degenerate(d) -> bool:
    """True iff d equals some s_i of a lower simplex.

    If d = s_i(d'), then d' appears among the faces of d, so scanning
    degeneracies of the faces is a complete check.
    """
    if d.dim == 0:
        return False
    if d.dim == 1:
        return d.face0 == d.face1 and d.face0.element == d.support
    return any(
        degeneracy(boundary(d, j), i) == d
        for j in range(d.dim + 1)
        for i in range(d.dim)
    )


def is_inflating(P: Poset, d) -> bool:
    """A 1-simplex is inflating when its start lies below its end;
    higher simplices, when all their faces are."""
    if d.dim == 0:
        return True
    if d.dim == 1:
        return P.leq(d.face1.element, d.face0.element)
    return all(is_inflating(P, boundary(d, i)) for i in range(d.dim + 1))


def reverse(b: Simplex1) -> Simplex1:
    """Same support, swapped endpoints; an involution."""
    return Simplex1(b.support, b.face1, b.face0)


# Orientation action on 2-simplices.  Keys are vertex permutations
# (sigma(0), sigma(1), sigma(2)): vertex k of the result is vertex
# sigma(k) of the input.  Face formulas are closed-form; R marks a
# reversed face.
_PERM2_FACES = {
    (0, 1, 2): ((0, False), (1, False), (2, False)),
    (1, 0, 2): ((1, False), (0, False), (2, True)),
    (2, 1, 0): ((2, True), (1, True), (0, True)),
    (0, 2, 1): ((0, True), (2, False), (1, False)),
    (2, 0, 1): ((2, False), (0, True), (1, True)),
    (1, 2, 0): ((1, True), (2, True), (0, False)),
}


def permute2(c: Simplex2, sigma) -> Simplex2:
    """The orientation (vertex permutation) action on a 2-simplex."""
    sigma = tuple(sigma)
    if sigma not in _PERM2_FACES:
        raise BadParameter(f"{sigma!r} is not a permutation of (0, 1, 2)")
    faces = []
    for idx, reversed_ in _PERM2_FACES[sigma]:
        face = boundary(c, idx)
        faces.append(reverse(face) if reversed_ else face)
    return Simplex2(c.support, *faces)


EVEN_PERMUTATIONS = ((0, 1, 2), (2, 0, 1), (1, 2, 0))
ODD_PERMUTATIONS = ((1, 0, 2), (2, 1, 0), (0, 2, 1))


def _nonempty_subsets(n):
    """Nonempty subsets of {0..n} ordered by (size, lexicographic)."""
    items = range(n + 1)
    subsets = []
    for size in range(1, n + 2):
        subsets.extend(itertools.combinations(items, size))
    return subsets


def _simplex_from_map(values, indices):
    """Build the nested simplex for a monotone map restricted to `indices`."""
    if len(indices) == 1:
        return Simplex0(values[indices])
    faces = [
        _simplex_from_map(values, indices[:k] + indices[k + 1:])
        for k in range(len(indices))
    ]
    top = values[indices]
    if len(indices) == 2:
        return Simplex1(top, *faces)
    if len(indices) == 3:
        return Simplex2(top, *faces)
    return Simplex3(top, *faces)


@lru_cache(maxsize=None)
def enumerate_simplices(P: Poset, n: int, inflating_only: bool = False):
    """All n-simplices of P in deterministic (sort key) order.

    Enumeration runs over monotone maps from the nonempty subsets of
    {0..n} into P, which is exactly the set of singular n-simplices.
    """
    if n < 0 or n > 3:
        raise UnsupportedDimension(f"dimension {n} not supported (0..3)")
    if n == 0:
        return tuple(Simplex0(x) for x in P.elements)
    subsets = _nonempty_subsets(n)
    results = []

    def assign(pos, values):
        if pos == len(subsets):
            results.append(_simplex_from_map(values, tuple(range(n + 1))))
            return
        subset = subsets[pos]
        if len(subset) == 1:
            candidates = P.elements
        else:
            lower = [values[subset[:k] + subset[k + 1:]] for k in range(len(subset))]
            candidates = [
                x for x in P.elements if all(P.leq(lo, x) for lo in lower)
            ]
        for x in candidates:
            values[subset] = x
            assign(pos + 1, values)
        values.pop(subset, None)

    assign(0, {})
    if inflating_only:
        results = [d for d in results if is_inflating(P, d)]
    results.sort(key=lambda d: d.sort_key())
    return tuple(results)


def validate_supports(P: Poset, d) -> bool:
    """Check that every face support sits below the simplex support."""
    if d.dim == 0:
        return d.element in P
    if support(d) not in P:
        return False
    return all(
        P.leq(support(boundary(d, i)), support(d)) and validate_supports(P, boundary(d, i))
        for i in range(d.dim + 1)
    )


def parse_simplex1(text: str) -> Simplex1:
    """Parse the textual encoding ``(<support>;<face0>,<face1>)``."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise BadParameter(f"bad 1-simplex encoding: {text!r}")
    body = text[1:-1]
    try:
        sup, faces = body.split(";")
        f0, f1 = faces.split(",")
    except ValueError:
        raise BadParameter(f"bad 1-simplex encoding: {text!r}") from None
    return Simplex1(sup.strip(), Simplex0(f0.strip()), Simplex0(f1.strip()))
