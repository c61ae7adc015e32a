"""Permutations as image tuples and finite permutation groups.

A permutation of degree n is a tuple ``p`` with ``p[i]`` the image of ``i``.
Products read right to left: ``compose(p, q)`` applies ``q`` first.
"""

from __future__ import annotations

from collections import Counter
from functools import cached_property
from itertools import permutations as _permutations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """Return ``p∘q`` (apply ``q`` first)."""
    if len(p) != len(q):
        raise ValueError("degree mismatch")
    return tuple(p[i] for i in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def conjugate(t: Perm, p: Perm) -> Perm:
    """Return ``t p t⁻¹``."""
    return compose(compose(t, p), inverse(t))


def is_permutation(p: Perm) -> bool:
    return sorted(p) == list(range(len(p)))


def transposition(n: int, i: int, j: int) -> Perm:
    images = list(range(n))
    images[i], images[j] = j, i
    return tuple(images)


def shift(p: Perm, k: int = 1) -> Perm:
    """Extend ``p`` by ``k`` fixed points at the end."""
    n = len(p)
    return p + tuple(range(n, n + k))


def concat(p: Perm, q: Perm) -> Perm:
    """Block-diagonal sum: ``p`` on the first points, ``q`` on the rest."""
    off = len(p)
    return p + tuple(v + off for v in q)


def block(p: Perm, offset: int, degree: int) -> Perm:
    return tuple(v - offset for v in p[offset:offset + degree])


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def order(p: Perm) -> int:
    result = 1
    for n in cycle_type(p):
        a, b = result, n
        while b:
            a, b = b, a % b
        result = result * n // a
    return result


def sign(p: Perm) -> int:
    return -1 if sum(n - 1 for n in cycle_type(p)) % 2 else 1


class PermutationGroup:
    """Finite group of permutations, with its elements enumerated eagerly."""

    def __init__(self, degree: int, generators, elements=None):
        self.degree = degree
        self.generators = tuple(generators)
        for g in self.generators:
            if len(g) != degree:
                raise ValueError("degree mismatch")
        if elements is None:
            elements = _closure(degree, self.generators)
        self.elements: tuple[Perm, ...] = tuple(sorted(elements))
        self._set = frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        return p in self._set

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, order={len(self)})"

    @property
    def identity(self) -> Perm:
        return identity(self.degree)

    @cached_property
    def order_profile(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(order(g) for g in self.elements).items()))

    @cached_property
    def class_sizes(self) -> dict[Perm, int]:
        """Size of the conjugacy class of each element."""
        sizes: dict[Perm, int] = {}
        for g in self.elements:
            if g in sizes:
                continue
            cls = {conjugate(t, g) for t in self.elements}
            for c in cls:
                sizes[c] = len(cls)
        return sizes

    def is_closed(self) -> bool:
        return frozenset(_closure(self.degree, self.elements)) == self._set


def _closure(degree: int, generators) -> set[Perm]:
    e = identity(degree)
    seen = {e}
    frontier = [e]
    gens = [g for g in generators if g != e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def group_closure(generators, degree: int | None = None) -> PermutationGroup:
    """Close a list of same-degree permutations under composition."""
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generator list")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise ValueError("degree mismatch")
    return PermutationGroup(degree, gens)


def subgroup_from_elements(degree: int, elements) -> PermutationGroup:
    """Wrap a known subgroup, choosing a small generating set greedily."""
    elements = sorted(set(elements))
    ranked = sorted(elements, key=lambda g: (-order(g), g))
    gens: list[Perm] = []
    span = {identity(degree)}
    for g in ranked:
        if g not in span:
            gens.append(g)
            span = _closure(degree, gens)
            if len(span) == len(elements):
                break
    if len(span) != len(elements):
        raise ValueError("elements do not form a group")
    return PermutationGroup(degree, gens, elements)


_SYM_CACHE: dict[int, PermutationGroup] = {}


def symmetric_group(n: int) -> PermutationGroup:
    if n not in _SYM_CACHE:
        gens = []
        if n >= 2:
            gens.append(transposition(n, 0, 1))
        if n >= 3:
            gens.append(tuple(list(range(1, n)) + [0]))
        els = list(_permutations(range(n)))
        _SYM_CACHE[n] = PermutationGroup(n, gens, els)
    return _SYM_CACHE[n]


def direct_product(groups) -> PermutationGroup:
    """Product group acting on the disjoint union of the point sets."""
    degree = 0
    gens: list[Perm] = []
    elements: list[Perm] = [()]
    for grp in groups:
        off = degree
        pad_before = tuple(range(off))
        for g in grp.generators:
            gens.append(pad_before + tuple(v + off for v in g))
        elements = [concat(e, g) for e in elements for g in grp.elements]
        degree += grp.degree
    gens = [g + tuple(range(len(g), degree)) for g in gens]
    return PermutationGroup(degree, gens, elements)


def young_subgroup(profile) -> PermutationGroup:
    """Product of symmetric groups on consecutive blocks."""
    return direct_product([symmetric_group(k) for k in profile])


def extend_to_isomorphism(G: PermutationGroup, H: PermutationGroup, images) -> dict | None:
    """Extend ``G.generators[i] ↦ images[i]`` to an isomorphism ``G → H``.

    Walks the Cayley graph of ``G``; returns the full element map, or None
    when the assignment is not a well-defined bijective homomorphism.
    """
    if len(G) != len(H):
        return None
    e = G.identity
    psi = {e: H.identity}
    frontier = [e]
    pairs = list(zip(G.generators, images))
    while frontier:
        nxt = []
        for x in frontier:
            px = psi[x]
            for g, img in pairs:
                y = compose(g, x)
                py = compose(img, px)
                known = psi.get(y)
                if known is None:
                    psi[y] = py
                    nxt.append(y)
                elif known != py:
                    return None
        frontier = nxt
    if len(psi) != len(G) or len(set(psi.values())) != len(H):
        return None
    return psi


def search_isomorphisms(G: PermutationGroup, H: PermutationGroup, candidates):
    """Yield isomorphisms ``G → H`` sending generator i into ``candidates[i]``."""
    gens = G.generators
    if len(G) != len(H):
        return
    if not gens:
        if len(H) == 1:
            yield {G.identity: H.identity}
        return
    choice: list[Perm] = []

    def rec(i):
        if i == len(gens):
            psi = extend_to_isomorphism(G, H, choice)
            if psi is not None:
                yield psi
            return
        for c in candidates[i]:
            choice.append(c)
            yield from rec(i + 1)
            choice.pop()

    yield from rec(0)


def find_group_isomorphism(G: PermutationGroup, H: PermutationGroup) -> dict | None:
    """Brute-force isomorphism search pruned by element order and class size."""
    if len(G) != len(H) or G.order_profile != H.order_profile:
        return None
    hs = H.class_sizes
    gs = G.class_sizes
    cands = []
    for g in G.generators:
        key = (order(g), gs[g])
        cands.append([h for h in H.elements if (order(h), hs[h]) == key])
    return next(search_isomorphisms(G, H, cands), None)
