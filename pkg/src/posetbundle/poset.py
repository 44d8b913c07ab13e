"""Finite posets: construction, order predicates and the fundamental covering.

The order relation is stored densely (a boolean matrix over the sorted
element identifiers).  Posets here are small by design, ~30 elements at
most; simplex enumeration dominates the cost of everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AntisymmetryViolation,
    BadParameter,
    DuplicateElement,
    UnknownElement,
)


class Poset:
    """A finite poset over string identifiers.

    Immutable after construction.  Iteration order over elements is the
    sorted identifier order, so every enumeration built on top of a poset
    is reproducible.
    """

    __slots__ = ("name", "elements", "_index", "_leq", "_hash")

    def __init__(self, elements, leq_pairs, name="poset"):
        self.name = name
        self.elements = tuple(sorted(elements))
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(self.elements)
        matrix = [[False] * n for _ in range(n)]
        for lo, hi in leq_pairs:
            matrix[self._index[lo]][self._index[hi]] = True
        self._leq = tuple(tuple(row) for row in matrix)
        self._hash = hash((self.elements, self._leq))

    def __contains__(self, x):
        return x in self._index

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.elements == other.elements and self._leq == other._leq

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset({self.name!r}, {len(self.elements)} elements)"

    def check_element(self, x):
        if x not in self._index:
            raise UnknownElement(f"{x!r} is not an element of {self.name}")

    def leq(self, lo, hi) -> bool:
        self.check_element(lo)
        self.check_element(hi)
        return self._leq[self._index[lo]][self._index[hi]]

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def down_set(self, x):
        """All y with y <= x, in sorted order."""
        self.check_element(x)
        i = self._index[x]
        return tuple(y for j, y in enumerate(self.elements) if self._leq[j][i])

    def up_set(self, x):
        """All y with x <= y, in sorted order."""
        self.check_element(x)
        i = self._index[x]
        return tuple(y for j, y in enumerate(self.elements) if self._leq[i][j])

    def pairs(self):
        """All ordered pairs (lo, hi) with lo <= hi."""
        out = []
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                if self._leq[i][j]:
                    out.append((x, y))
        return tuple(out)


@dataclass(frozen=True)
class OpenSet:
    """An upward-closed subset of a poset (an Alexandroff open set)."""

    members: tuple

    def __contains__(self, x):
        return x in self.members


def reflexive_transitive_closure(elements, relations):
    """Warshall closure of the given pairs plus the diagonal."""
    elements = list(elements)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    m = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in relations:
        m[index[lo]][index[hi]] = True
    for k in range(n):
        row_k = m[k]
        for i in range(n):
            if m[i][k]:
                row_i = m[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return [
        (elements[i], elements[j])
        for i in range(n)
        for j in range(n)
        if m[i][j]
    ]


def build_poset(elements, relations, name="poset") -> Poset:
    """Build a poset from generating pairs, taking the reflexive-transitive
    closure and rejecting antisymmetry violations."""
    seen = set()
    for x in elements:
        if x in seen:
            raise DuplicateElement(f"duplicate element {x!r}")
        seen.add(x)
    for lo, hi in relations:
        if lo not in seen:
            raise UnknownElement(f"relation references unknown element {lo!r}")
        if hi not in seen:
            raise UnknownElement(f"relation references unknown element {hi!r}")
    closure = reflexive_transitive_closure(sorted(seen), relations)
    closed = set(closure)
    for lo, hi in closure:
        if lo != hi and (hi, lo) in closed:
            raise AntisymmetryViolation(f"{lo!r} <= {hi!r} and {hi!r} <= {lo!r}")
    return Poset(seen, closure, name=name)


def is_directed(P: Poset) -> bool:
    """True iff every pair of elements has a common upper bound."""
    for x in P.elements:
        ux = set(P.up_set(x))
        for y in P.elements:
            if ux.isdisjoint(P.up_set(y)):
                return False
    return True


def is_totally_ordered(P: Poset) -> bool:
    for i, x in enumerate(P.elements):
        for y in P.elements[i + 1:]:
            if not P.comparable(x, y):
                return False
    return True


def is_pathwise_connected(P: Poset) -> bool:
    """Connectivity of the comparability graph.

    Equivalent to nonemptiness of every path set K(a0, a1): each
    comparability edge carries a 1-simplex through the larger element.
    """
    if not P.elements:
        return True
    seen = {P.elements[0]}
    frontier = [P.elements[0]]
    while frontier:
        x = frontier.pop()
        for y in P.elements:
            if y not in seen and P.comparable(x, y):
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(P.elements)


def fundamental_open(P: Poset, a) -> OpenSet:
    """The basic open set {x | a <= x} of the fundamental covering."""
    return OpenSet(P.up_set(a))


def generate(kind: str, n: int, name=None) -> Poset:
    """Fixture posets: chain(n), vee, circle(n).

    chain(n): x1 <= ... <= xn.  vee: a1, a2 <= o (n ignored).
    circle(n): a_1..a_n, o_1..o_n with a_i <= o_i and a_{i mod n + 1} <= o_i;
    its comparability graph is a 2n-cycle.
    """
    if kind == "chain":
        if n < 1:
            raise BadParameter("chain requires n >= 1")
        elems = [f"x{i}" for i in range(1, n + 1)]
        rels = [(f"x{i}", f"x{i + 1}") for i in range(1, n)]
        return build_poset(elems, rels, name=name or f"chain{n}")
    if kind == "vee":
        return build_poset(
            ["a1", "a2", "o"], [("a1", "o"), ("a2", "o")], name=name or "vee"
        )
    if kind == "circle":
        if n < 2:
            raise BadParameter("circle requires n >= 2")
        elems = [f"a{i}" for i in range(1, n + 1)] + [f"o{i}" for i in range(1, n + 1)]
        rels = []
        for i in range(1, n + 1):
            rels.append((f"a{i}", f"o{i}"))
            rels.append((f"a{i % n + 1}", f"o{i}"))
        return build_poset(elems, rels, name=name or f"circle{n}")
    raise BadParameter(f"unknown poset kind {kind!r}")


def parse_poset_text(text: str) -> Poset:
    """Parse the line-oriented poset format.

    line 1: ``poset <name>``; then ``elem <id> ...`` lines; then
    ``le <lower> <upper>`` lines.  ``#`` starts a comment.
    """
    name = None
    elements = []
    relations = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "poset":
            if len(fields) != 2:
                raise BadParameter(f"bad poset header: {raw!r}")
            name = fields[1]
        elif fields[0] == "elem":
            elements.extend(fields[1:])
        elif fields[0] == "le":
            if len(fields) != 3:
                raise BadParameter(f"bad le line: {raw!r}")
            relations.append((fields[1], fields[2]))
        else:
            raise BadParameter(f"unrecognized poset line: {raw!r}")
    if name is None:
        raise BadParameter("missing 'poset <name>' header")
    return build_poset(elements, relations, name=name)


def format_poset_text(P: Poset) -> str:
    lines = [f"poset {P.name}", "elem " + " ".join(P.elements)]
    for lo, hi in P.pairs():
        if lo != hi:
            lines.append(f"le {lo} {hi}")
    return "\n".join(lines) + "\n"
