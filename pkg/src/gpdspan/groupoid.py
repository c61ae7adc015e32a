"""Skeletal finite groupoids, functors between them and natural isomorphisms.

A connected groupoid is stored as one base object together with its
automorphism group; a functor sends each component to a component and
carries a group homomorphism between the automorphism groups.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .groups import (
    Perm,
    PermutationGroup,
    compose,
    find_group_isomorphism,
    identity,
    inverse,
    young_subgroup,
)


@dataclass(frozen=True)
class Component:
    label: object
    profile: tuple[int, ...]
    group: PermutationGroup = field(compare=False)

    @property
    def size(self) -> int:
        return sum(self.profile)

    @property
    def members(self):
        return ((self.label, self.group.identity),)


class SkeletalGroupoid:
    def __init__(self, components, kind: str = "set-bijection"):
        self.components: tuple[Component, ...] = tuple(components)
        self.kind = kind
        self._index = {c.label: i for i, c in enumerate(self.components)}

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Component:
        return self.components[i]

    def __repr__(self) -> str:
        return f"SkeletalGroupoid({len(self)} components, kind={self.kind!r})"

    def index(self, obj) -> int:
        """Resolve an object given by label or by component index."""
        if obj in self._index:
            return self._index[obj]
        if isinstance(obj, int) and 0 <= obj < len(self.components):
            return obj
        raise KeyError(f"unknown object {obj!r}")

    def group(self, i: int) -> PermutationGroup:
        return self.components[i].group

    def size(self, i: int) -> int:
        return self.components[i].size


def groupoid_cardinality(G: SkeletalGroupoid) -> Fraction:
    return sum((Fraction(1, len(c.group)) for c in G.components), Fraction(0))


def hom_set(G: SkeletalGroupoid, a, b) -> list[Perm]:
    i, j = G.index(a), G.index(b)
    if i != j:
        return []
    return list(G.group(i).elements)


def fs_truncated(max_card: int, colors: int = 1) -> SkeletalGroupoid:
    """Finite (coloured) sets of total size at most ``max_card``.

    Cached, so equal arguments give the identical groupoid object.
    """
    return _fs_truncated(max_card, colors)


@lru_cache(maxsize=None)
def _fs_truncated(max_card: int, colors: int) -> SkeletalGroupoid:
    if colors < 1:
        raise ValueError("colors must be positive")
    comps = []
    for total in range(max_card + 1):
        for profile in _compositions(total, colors):
            comps.append(Component(profile, profile, young_subgroup(profile)))
    kind = "set-bijection" if colors == 1 else "colour-preserving-bijection"
    return SkeletalGroupoid(comps, kind)


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def point() -> SkeletalGroupoid:
    """The one-object groupoid with trivial automorphisms."""
    return SkeletalGroupoid([Component("pt", (), PermutationGroup(0, []))], "point")


def empty_groupoid() -> SkeletalGroupoid:
    return SkeletalGroupoid([], "empty")


def disjoint_union(*parts: SkeletalGroupoid) -> SkeletalGroupoid:
    comps = []
    for k, G in enumerate(parts):
        for c in G.components:
            comps.append(Component((k, c.label), c.profile, c.group))
    return SkeletalGroupoid(comps, "disjoint-union")


class Functor:
    """Skeletal functor: a component map plus per-component homomorphisms.

    Homomorphisms are given by a rule ``hom_rule(i, h)`` and tabulated
    lazily over the whole source group on first use.
    """

    def __init__(self, source: SkeletalGroupoid, target: SkeletalGroupoid, comp_map, hom_rule):
        self.source = source
        self.target = target
        self.comp_map: tuple[int, ...] = tuple(comp_map)
        if len(self.comp_map) != len(source):
            raise ValueError("component map has wrong length")
        self._rule = hom_rule
        self._tables: dict[int, dict[Perm, Perm]] = {}

    def table(self, i: int) -> dict[Perm, Perm]:
        t = self._tables.get(i)
        if t is None:
            t = {h: self._rule(i, h) for h in self.source.group(i).elements}
            self._tables[i] = t
        return t

    def __call__(self, i: int, h: Perm) -> Perm:
        t = self._tables.get(i)
        if t is not None:
            return t[h]
        return self._rule(i, h)

    def preimages(self, i: int) -> dict[Perm, list[Perm]]:
        out: dict[Perm, list[Perm]] = defaultdict(list)
        for h, v in self.table(i).items():
            out[v].append(h)
        return out

    def is_functor(self) -> bool:
        """Exhaustive check that each component map is a homomorphism."""
        for i, j in enumerate(self.comp_map):
            G = self.source.group(i)
            tgt = self.target.group(j)
            t = self.table(i)
            if t[G.identity] != tgt.identity:
                return False
            for g in G.generators:
                for h in G.elements:
                    if t[compose(g, h)] != compose(t[g], t[h]) or t[h] not in tgt:
                        return False
        return True


def identity_functor(G: SkeletalGroupoid) -> Functor:
    return Functor(G, G, range(len(G)), lambda i, h: h)


def compose_functors(g: Functor, f: Functor) -> Functor:
    """The composite ``g∘f`` (apply ``f`` first)."""
    if f.target is not g.source:
        raise ValueError("functors are not composable")
    return Functor(
        f.source,
        g.target,
        [g.comp_map[j] for j in f.comp_map],
        lambda i, h: g(f.comp_map[i], f(i, h)),
    )


def plus_one(source: SkeletalGroupoid, target: SkeletalGroupoid, color: int = 0) -> Functor:
    """Add one point of the given colour, placed at the end of its block."""
    comp_map = []
    for c in source.components:
        prof = list(c.profile)
        prof[color] += 1
        comp_map.append(target.index(tuple(prof)))

    def rule(i, h):
        prof = source[i].profile
        cut = sum(prof[: color + 1])
        out = [v if v < cut else v + 1 for v in h[:cut]]
        out.append(cut)
        out.extend(v if v < cut else v + 1 for v in h[cut:])
        return tuple(out)

    return Functor(source, target, comp_map, rule)


def inclusion(source: SkeletalGroupoid, target: SkeletalGroupoid) -> Functor:
    """Inclusion of a truncation into a larger one, matched by label."""
    return Functor(source, target, [target.index(c.label) for c in source.components], lambda i, h: h)


class NaturalIso:
    """Natural isomorphism between two functors with the same source and target."""

    def __init__(self, source: Functor, target: Functor, components):
        self.source = source
        self.target = target
        self.components: tuple[Perm, ...] = tuple(components)

    def is_natural(self) -> bool:
        F, G = self.source, self.target
        for i in range(len(F.source)):
            if F.comp_map[i] != G.comp_map[i]:
                return False
            eta = self.components[i]
            if eta not in F.target.group(F.comp_map[i]):
                return False
            for h in F.source.group(i).generators:
                if compose(eta, F(i, h)) != compose(G(i, h), eta):
                    return False
        return True

    def inverse(self) -> NaturalIso:
        return NaturalIso(self.target, self.source, [inverse(e) for e in self.components])


def identity_iso(F: Functor) -> NaturalIso:
    return NaturalIso(F, F, [identity(F.target.group(j).degree) for j in F.comp_map])


@dataclass
class GroupoidEquivalence:
    component_map: dict[int, int]
    isomorphisms: dict[int, dict[Perm, Perm]]


def groupoids_equivalent(G: SkeletalGroupoid, H: SkeletalGroupoid, match_profiles: bool = False):
    """Find an equivalence ``G ≃ H`` by matching components with isomorphic groups."""
    if len(G) != len(H):
        return None

    def signature(c: Component):
        sig = (len(c.group), c.group.order_profile)
        return sig + (c.profile,) if match_profiles else sig

    pool: dict[object, list[int]] = defaultdict(list)
    for j, c in enumerate(H.components):
        pool[signature(c)].append(j)
    cmap: dict[int, int] = {}
    isos: dict[int, dict[Perm, Perm]] = {}
    for i, c in enumerate(G.components):
        bucket = pool.get(signature(c), [])
        for pos, j in enumerate(bucket):
            psi = find_group_isomorphism(c.group, H.group(j))
            if psi is not None:
                cmap[i] = j
                isos[i] = psi
                bucket.pop(pos)
                break
        else:
            return None
    return GroupoidEquivalence(cmap, isos)
