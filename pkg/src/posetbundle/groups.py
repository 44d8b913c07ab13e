"""Finite groups via Cayley tables, inner automorphisms, and the
2-/3-category composition laws used as non-Abelian coefficients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import (
    DiamondUndefined,
    DotUndefined,
    MalformedTable,
    Mismatch,
    NoIdentity,
    NoInverse,
    NotAssociative,
)


class FiniteGroup:
    """A finite group over string symbols, backed by its Cayley table.

    All axioms (associativity, identity, inverses) are checked at
    construction; downstream code trusts the table.
    """

    __slots__ = ("name", "elements", "identity", "_mul", "_inv", "_center", "_hash")

    def __init__(self, elements, table, name="group"):
        self.name = name
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise MalformedTable("duplicate group elements")
        self._mul = {}
        for g in self.elements:
            for h in self.elements:
                try:
                    gh = table[(g, h)]
                except KeyError:
                    raise MalformedTable(f"missing product {g!r}*{h!r}") from None
                if gh not in set(self.elements):
                    raise MalformedTable(f"product {g!r}*{h!r} = {gh!r} not an element")
                self._mul[(g, h)] = gh
        for g in self.elements:
            for h in self.elements:
                for k in self.elements:
                    if self.mul(self.mul(g, h), k) != self.mul(g, self.mul(h, k)):
                        raise NotAssociative(f"({g}*{h})*{k} != {g}*({h}*{k})")
        identity = None
        for e in self.elements:
            if all(self.mul(e, g) == g and self.mul(g, e) == g for g in self.elements):
                identity = e
                break
        if identity is None:
            raise NoIdentity("table has no two-sided identity")
        self.identity = identity
        self._inv = {}
        for g in self.elements:
            inv = next(
                (h for h in self.elements if self.mul(g, h) == identity
                 and self.mul(h, g) == identity),
                None,
            )
            if inv is None:
                raise NoInverse(f"{g!r} has no inverse")
            self._inv[g] = inv
        self._center = tuple(
            g for g in self.elements
            if all(self.mul(g, h) == self.mul(h, g) for h in self.elements)
        )
        self._hash = hash((self.elements, tuple(sorted(self._mul.items()))))

    # -- basic operations -------------------------------------------------

    def mul(self, g, h):
        return self._mul[(g, h)]

    def inv(self, g):
        return self._inv[g]

    def product(self, *factors):
        out = self.identity
        for g in factors:
            out = self.mul(out, g)
        return out

    def conjugate(self, g, h):
        """g h g^-1."""
        return self.mul(self.mul(g, h), self.inv(g))

    def center(self):
        return self._center

    def is_abelian(self):
        return len(self._center) == len(self.elements)

    def is_trivial(self):
        return len(self.elements) == 1

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self._inv

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.elements == other.elements and self._mul == other._mul

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order {len(self.elements)})"

    # -- derived subsets --------------------------------------------------

    def subgroup_generated(self, generators):
        """Worklist closure of a generating subset, in element order."""
        members = {self.identity}
        frontier = [self.identity]
        gens = [g for g in generators]
        for g in gens:
            if g not in members:
                members.add(g)
                frontier.append(g)
        while frontier:
            h = frontier.pop()
            for g in gens + [self.inv(h)]:
                for prod in (self.mul(h, g), self.mul(g, h)):
                    if prod not in members:
                        members.add(prod)
                        frontier.append(prod)
        return tuple(g for g in self.elements if g in members)

    def centralizer(self, subset):
        return tuple(
            g for g in self.elements
            if all(self.mul(g, h) == self.mul(h, g) for h in subset)
        )

    def conjugate_subset(self, subset, g):
        conj = {self.conjugate(g, h) for h in subset}
        return tuple(h for h in self.elements if h in conj)

    def normal_closure_in(self, ambient, generators):
        """Normal closure of `generators` inside the subgroup `ambient`."""
        closure = set(self.subgroup_generated(generators))
        changed = True
        while changed:
            changed = False
            for g in ambient:
                for h in list(closure):
                    c = self.conjugate(g, h)
                    if c not in closure:
                        closure = set(
                            self.subgroup_generated(tuple(closure) + (c,))
                        )
                        changed = True
        return tuple(g for g in self.elements if g in closure)

    def subgroup(self, members, name=None):
        """The sub-Cayley-table group on a closed subset."""
        members = tuple(members)
        table = {}
        member_set = set(members)
        for g in members:
            for h in members:
                gh = self.mul(g, h)
                if gh not in member_set:
                    raise MalformedTable(f"subset not closed: {g!r}*{h!r}")
                table[(g, h)] = gh
        return FiniteGroup(members, table, name=name or f"{self.name}-sub")


# -- standard constructions ----------------------------------------------


def trivial_group():
    return FiniteGroup(("e",), {("e", "e"): "e"}, name="1")


def cyclic_group(n: int, name=None):
    """Z_n written multiplicatively with elements g0..g{n-1} (g0 = e)."""
    elems = [f"g{i}" for i in range(n)]
    table = {
        (f"g{i}", f"g{j}"): f"g{(i + j) % n}" for i in range(n) for j in range(n)
    }
    return FiniteGroup(elems, table, name=name or f"Z{n}")


def symmetric_group(n: int, name=None):
    """S_n on {1..n}; elements are one-line permutation words like '132'."""
    perms = sorted(itertools.permutations(range(1, n + 1)))
    def label(p):
        return "".join(str(i) for i in p)
    table = {}
    for p in perms:
        for q in perms:
            # (p q)(i) = p(q(i))
            pq = tuple(p[q[i] - 1] for i in range(n))
            table[(label(p), label(q))] = label(pq)
    return FiniteGroup([label(p) for p in perms], table, name=name or f"S{n}")


# -- inner automorphisms and the categories 2G, 3G -----------------------


@dataclass(frozen=True, eq=False)
class InnerAut:
    """ad(g): h -> g h g^-1, carried by a canonical coset representative.

    Two representatives define the same inner automorphism iff they
    differ by a central element; the canonical representative is the
    first element of the coset g Z(G) in the group's element order.
    """

    group: FiniteGroup
    representative: str
    canonical: str = field(init=False)

    def __post_init__(self):
        G = self.group
        coset = {G.mul(self.representative, z) for z in G.center()}
        canon = next(g for g in G.elements if g in coset)
        object.__setattr__(self, "canonical", canon)

    def __eq__(self, other):
        if not isinstance(other, InnerAut):
            return NotImplemented
        return self.group == other.group and self.canonical == other.canonical

    def __hash__(self):
        return hash((self.group, self.canonical))

    def __call__(self, h):
        return self.group.conjugate(self.representative, h)

    def compose(self, other: "InnerAut") -> "InnerAut":
        return InnerAut(self.group, self.group.mul(self.representative,
                                                   other.representative))

    def inverse(self) -> "InnerAut":
        return InnerAut(self.group, self.group.inv(self.representative))

    def is_identity(self):
        return self.canonical == InnerAut(self.group, self.group.identity).canonical


def ad(G: FiniteGroup, g) -> InnerAut:
    return InnerAut(G, g)


def identity_aut(G: FiniteGroup) -> InnerAut:
    return InnerAut(G, G.identity)


@dataclass(frozen=True)
class Arrow2G:
    g: str
    tau: InnerAut


@dataclass(frozen=True)
class Arrow3G:
    g: str  # must be central
    tau: InnerAut
    gamma: InnerAut

    def __post_init__(self):
        if self.g not in self.tau.group.center():
            raise Mismatch(f"{self.g!r} is not central")


def compose_2g(x: Arrow2G, y: Arrow2G, law: str) -> Arrow2G:
    """The two composition laws of 2G.

    times: (g, tau) x (h, gamma) = (g tau(h), tau gamma), always defined.
    diamond: (g, tau) <> (h, gamma) = (g h, gamma), defined when
    ad(h) gamma = tau.
    """
    G = x.tau.group
    if law == "times":
        return Arrow2G(G.mul(x.g, x.tau(y.g)), x.tau.compose(y.tau))
    if law == "diamond":
        if ad(G, y.g).compose(y.tau) != x.tau:
            raise DiamondUndefined("side condition ad(h) gamma = tau fails")
        return Arrow2G(G.mul(x.g, y.g), y.tau)
    raise Mismatch(f"unknown 2G law {law!r}")


def compose_3g(x: Arrow3G, y: Arrow3G, law: str) -> Arrow3G:
    """The three composition laws of 3G (times < diamond < dot)."""
    G = x.tau.group
    gg = G.mul(x.g, y.g)
    if law == "times":
        gamma = x.gamma.compose(x.tau).compose(y.gamma).compose(x.tau.inverse())
        return Arrow3G(gg, x.tau.compose(y.tau), gamma)
    if law == "diamond":
        if x.tau != y.gamma.compose(y.tau):
            raise DiamondUndefined("side condition tau = gamma' tau' fails")
        return Arrow3G(gg, y.tau, x.gamma.compose(y.gamma))
    if law == "dot":
        if x.tau != y.tau or x.gamma != y.gamma:
            raise DotUndefined("dot requires equal tau and gamma components")
        return Arrow3G(gg, x.tau, x.gamma)
    raise Mismatch(f"unknown 3G law {law!r}")


def unit_2g(G: FiniteGroup) -> Arrow2G:
    return Arrow2G(G.identity, identity_aut(G))


def one_arrows_2g(G: FiniteGroup):
    """The 1-arrows of 2G: pairs (e, tau)."""
    seen = []
    for g in G.elements:
        tau = ad(G, g)
        if all(tau != existing.tau for existing in seen):
            seen.append(Arrow2G(G.identity, tau))
    return tuple(seen)


# -- group homomorphisms --------------------------------------------------


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    mapping: tuple  # sorted (element, image) pairs

    @classmethod
    def from_dict(cls, source, target, mapping):
        hom = cls(source, target, tuple(sorted(mapping.items())))
        hom.validate()
        return hom

    @classmethod
    def identity(cls, G):
        return cls.from_dict(G, G, {g: g for g in G.elements})

    @classmethod
    def inclusion(cls, sub: FiniteGroup, G: FiniteGroup):
        return cls.from_dict(sub, G, {g: g for g in sub.elements})

    def as_dict(self):
        return dict(self.mapping)

    def validate(self):
        m = self.as_dict()
        if set(m) != set(self.source.elements):
            raise Mismatch("homomorphism not total on its source")
        for g in self.source.elements:
            if m[g] not in self.target:
                raise Mismatch(f"image {m[g]!r} not in target group")
        for g in self.source.elements:
            for h in self.source.elements:
                if m[self.source.mul(g, h)] != self.target.mul(m[g], m[h]):
                    raise Mismatch(f"not a homomorphism at ({g!r}, {h!r})")

    def __call__(self, g):
        return self.as_dict()[g]

    def is_injective(self):
        m = self.as_dict()
        return len(set(m.values())) == len(m)


def hom_compose(outer: GroupHom, inner: GroupHom) -> GroupHom:
    """Pointwise composite outer . inner, validated."""
    if inner.target != outer.source:
        raise Mismatch("homomorphism targets/sources do not line up")
    return GroupHom.from_dict(
        inner.source, outer.target, {g: outer(inner(g)) for g in inner.source.elements}
    )


# -- textual format -------------------------------------------------------


def parse_group_text(text: str) -> FiniteGroup:
    """Parse the Cayley-table group format.

    ``group <name>`` / ``elems <e> <g1> ...`` (first listed is the
    identity) / ``table`` followed by one row per element:
    ``<g>: <g*e> <g*g1> ...`` in the elems order.
    """
    name = None
    elems = None
    rows = {}
    in_table = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if not in_table:
            if fields[0] == "group":
                name = fields[1] if len(fields) == 2 else None
                if name is None:
                    raise MalformedTable(f"bad group header: {raw!r}")
            elif fields[0] == "elems":
                elems = fields[1:]
            elif fields[0] == "table":
                in_table = True
            else:
                raise MalformedTable(f"unrecognized group line: {raw!r}")
        else:
            head, _, rest = line.partition(":")
            g = head.strip()
            row = rest.split()
            rows[g] = row
    if name is None or elems is None:
        raise MalformedTable("missing group header or elems line")
    table = {}
    for g in elems:
        if g not in rows or len(rows[g]) != len(elems):
            raise MalformedTable(f"missing or short table row for {g!r}")
        for h, gh in zip(elems, rows[g]):
            table[(g, h)] = gh
    G = FiniteGroup(elems, table, name=name)
    if G.identity != elems[0]:
        raise NoIdentity("first listed element is not the identity")
    return G


def format_group_text(G: FiniteGroup) -> str:
    elems = [G.identity] + [g for g in G.elements if g != G.identity]
    lines = [f"group {G.name}", "elems " + " ".join(elems), "table"]
    for g in elems:
        lines.append(f"{g}: " + " ".join(G.mul(g, h) for h in elems))
    return "\n".join(lines) + "\n"
