"""Spans of skeletal groupoids and their composition by weak pullback.

Every span is either *atomic* (a single letter) or a *chain*: the iterated
weak pullback of a sequence of atomic letters, listed in the order they are
applied.  Composing two spans concatenates their letter sequences and builds
the chain afresh, so composition is strictly associative and the identity
span (no letters) is a strict unit.

Chain objects are tuples ``(x_1, f_1, x_2, …, x_k)`` with ``x_i`` an apex
component of letter ``i`` and ``f_i : left_i(x_i) → right_{i+1}(x_{i+1})``.
A tuple of automorphisms ``(a_i)`` acts by
``f_i ↦ right_{i+1}(a_{i+1}) · f_i · left_i(a_i)⁻¹``; isomorphism classes are
built one letter at a time as double cosets, keeping a lookup table that
brings any raw tuple to its canonical representative.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .groupoid import (
    Component,
    Functor,
    SkeletalGroupoid,
    disjoint_union,
    empty_groupoid,
    fs_truncated,
    identity_functor,
    inclusion,
    plus_one,
)
from .groups import (
    Perm,
    block,
    compose,
    concat,
    conjugate,
    cycle_type,
    extend_to_isomorphism,
    identity,
    inverse,
    subgroup_from_elements,
)


class Span:
    """A span ``target <-left- apex -right-> source``.

    Attributes:
        letters: the atomic spans whose chain pullback this is, in the order
            applied (a single ``self`` for atomic spans, empty for identities).
        max_card: truncation bound of the boundary groupoids.
        degree: number of ±1 letters in the word that built the span.
    """

    def __init__(self, apex, left, right, source, target, max_card, degree, name=""):
        self.apex: SkeletalGroupoid = apex
        self.left: Functor = left
        self.right: Functor = right
        self.source: SkeletalGroupoid = source
        self.target: SkeletalGroupoid = target
        self.max_card = max_card
        self.degree = degree
        self.name = name
        self.letters: tuple[Span, ...] = (self,)
        self._dagger: Span | None = None

    def __repr__(self) -> str:
        return f"Span({self.name or '?'}, {len(self.apex)} classes, N={self.max_card}, deg={self.degree})"

    @property
    def safe_bound(self) -> int:
        return self.max_card - self.degree

    # raw-object interface, overridden by chains and identities
    def expand(self, c: int):
        """Letter components and canonical junctions of apex component ``c``."""
        return (c,), ()

    def split(self, c: int, h: Perm) -> tuple[Perm, ...]:
        return (h,)

    def canonicalize(self, xs, fs):
        """Canonical component of a raw interior, with a transporter per letter."""
        (x,) = xs
        return x, (self.apex.group(x).identity,)


def _set_dagger(a: Span, b: Span) -> None:
    a._dagger, b._dagger = b, a


class IdentitySpan(Span):
    def __init__(self, G: SkeletalGroupoid, max_card: int):
        idf = identity_functor(G)
        super().__init__(G, idf, idf, G, G, max_card, 0, "id")
        self.letters = ()
        self._dagger = self

    def expand(self, c):
        return (), ()

    def split(self, c, h):
        return ()

    def canonicalize(self, xs, fs):
        raise ValueError("identity span has no interior")


_IDENTITIES: dict[int, IdentitySpan] = {}


def identity_span(G: SkeletalGroupoid, max_card: int | None = None) -> IdentitySpan:
    if max_card is None:
        max_card = max((c.size for c in G.components), default=0)
    key = id(G)
    if key not in _IDENTITIES:
        _IDENTITIES[key] = IdentitySpan(G, max_card)
    return _IDENTITIES[key]


def zero_span(source: SkeletalGroupoid, target: SkeletalGroupoid, max_card: int) -> Span:
    E = empty_groupoid()
    return Span(E, Functor(E, target, [], None), Functor(E, source, [], None), source, target, max_card, 0, "0")


_LETTERS: dict[tuple, Span] = {}


def _ladder(max_card: int, colors: int, color: int, raise_: bool) -> Span:
    key = (max_card, colors, color, raise_)
    if key in _LETTERS:
        return _LETTERS[key]
    if max_card < 1:
        warnings.warn("maxCard 0 leaves no room for any history; span is empty", stacklevel=3)
        G = fs_truncated(0, colors)
        return zero_span(G, G, 0)
    apex = fs_truncated(max_card - 1, colors)
    bound = fs_truncated(max_card, colors)
    inc = inclusion(apex, bound)
    up = plus_one(apex, bound, color)
    tag = "" if colors == 1 else f"_{color + 1}"
    if raise_:
        span = Span(apex, up, inc, bound, bound, max_card, 1, f"A†{tag}")
    else:
        span = Span(apex, inc, up, bound, bound, max_card, 1, f"A{tag}")
    _LETTERS[key] = span
    return span


def creation_span(max_card: int, colors: int = 1, color: int = 0) -> Span:
    """A†: left leg adds a point, right leg is the identity."""
    s = _ladder(max_card, colors, color, True)
    if max_card >= 1 and s._dagger is None:
        _set_dagger(s, _ladder(max_card, colors, color, False))
    return s


def annihilation_span(max_card: int, colors: int = 1, color: int = 0) -> Span:
    """A: left leg is the identity, right leg adds a point."""
    s = _ladder(max_card, colors, color, False)
    if max_card >= 1 and s._dagger is None:
        _set_dagger(s, _ladder(max_card, colors, color, True))
    return s


@dataclass
class _Level:
    comps: list[tuple[tuple[int, ...], tuple[Perm, ...]]]
    groups: list
    degrees: list[tuple[int, ...]]
    tables: dict[tuple[int, int], dict[Perm, tuple[int, Perm]]]


class ChainSpan(Span):
    """Iterated weak pullback of two or more atomic letters."""

    def __init__(self, letters: tuple[Span, ...]):
        self.chain_letters = letters
        levels = _build_levels(letters)
        top = levels[-1]
        self.levels = levels
        comps = []
        for idx, ((xs, fs), grp) in enumerate(zip(top.comps, top.groups)):
            profile = letters[0].source[letters[0].right.comp_map[xs[0]]].profile
            comps.append(Component((xs, fs), profile, grp))
        apex = SkeletalGroupoid(comps, "history")
        first, last = letters[0], letters[-1]
        degs = top.degrees

        def right_rule(i, h):
            x1 = top.comps[i][0][0]
            return first.right(x1, block(h, 0, degs[i][0]))

        def left_rule(i, h):
            xk = top.comps[i][0][-1]
            return last.left(xk, block(h, sum(degs[i][:-1]), degs[i][-1]))

        right = Functor(apex, first.source, [first.right.comp_map[xs[0]] for xs, _ in top.comps], right_rule)
        left = Functor(apex, last.target, [last.left.comp_map[xs[-1]] for xs, _ in top.comps], left_rule)
        name = "∘".join(s.name for s in reversed(letters))
        super().__init__(
            apex, left, right, first.source, last.target,
            min(s.max_card for s in letters), sum(s.degree for s in letters), name,
        )
        self.letters = letters

    def expand(self, c):
        return self.apex[c].label

    def split(self, c, h):
        out = []
        off = 0
        for d in self.levels[-1].degrees[c]:
            out.append(block(h, off, d))
            off += d
        return tuple(out)

    def canonicalize(self, xs, fs):
        letters = self.chain_letters
        comp = xs[0]
        trans = letters[0].apex.group(xs[0]).identity
        for i in range(1, len(xs)):
            level = self.levels[i - 1]
            prev_x = xs[i - 1]
            d_last = level.degrees[comp][-1]
            g_last = block(trans, len(trans) - d_last, d_last)
            lf = letters[i - 1].left(prev_x, g_last)
            f = compose(fs[i - 1], inverse(lf))
            new_comp, tr = self.levels[i].tables[(comp, xs[i])][f]
            ext = concat(trans, letters[i].apex.group(xs[i]).identity)
            trans = compose(tr, ext)
            comp = new_comp
        return comp, self.split(comp, trans)


def _build_levels(letters) -> list[_Level]:
    L1 = letters[0]
    comps = [((x,), ()) for x in range(len(L1.apex))]
    groups = [L1.apex.group(x) for x in range(len(L1.apex))]
    degrees = [(g.degree,) for g in groups]
    levels = [_Level(comps, groups, degrees, {})]
    for k in range(1, len(letters)):
        prev, Lprev, Lk = levels[-1], letters[k - 1], letters[k]
        if Lprev.target is not Lk.source:
            raise ValueError("mismatched boundary groupoids")
        by_comp: dict[int, list[int]] = defaultdict(list)
        for x, c in enumerate(Lk.right.comp_map):
            by_comp[c].append(x)
        new = _Level([], [], [], {})
        for p, ((xs, fs), GP) in enumerate(zip(prev.comps, prev.groups)):
            c = Lprev.left.comp_map[xs[-1]]
            for x in by_comp.get(c, []):
                _extend(new, p, xs, fs, GP, prev.degrees[p], x, Lprev, Lk, Lk.source.group(c))
        levels.append(new)
    return levels


def _extend(new: _Level, p, xs, fs, GP, degs, x, Lprev, Lk, Ac) -> None:
    """Add the classes over prefix ``p`` extended by letter component ``x``."""
    Ax = Lk.apex.group(x)
    dP, dx = GP.degree, Ax.degree
    d_last = degs[-1]
    xl = xs[-1]
    lp = {g: Lprev.left(xl, block(g, dP - d_last, d_last)) for g in GP.elements}
    rx = Lk.right.table(x)
    rx_pre: dict[Perm, list[Perm]] = defaultdict(list)
    for a, v in rx.items():
        rx_pre[v].append(a)
    gens = [(concat(g, Ax.identity), lp[g], Ac.identity) for g in GP.generators]
    gens += [(concat(GP.identity, a), Ac.identity, rx[a]) for a in Ax.generators]
    gens = [(t, inverse(l), r) for t, l, r in gens]
    table: dict[Perm, tuple[int, Perm]] = {}
    ident = concat(GP.identity, Ax.identity)
    for rep in Ac.elements:
        if rep in table:
            continue
        comp = len(new.comps)
        trans = {rep: ident}
        frontier = [rep]
        while frontier:
            nxt = []
            for f in frontier:
                tf = trans[f]
                for t, linv, r in gens:
                    f2 = compose(compose(r, f), linv)
                    if f2 not in trans:
                        trans[f2] = compose(t, tf)
                        nxt.append(f2)
            frontier = nxt
        for f, tf in trans.items():
            table[f] = (comp, inverse(tf))
        rep_inv = inverse(rep)
        stab = []
        for g in GP.elements:
            need = compose(compose(rep, lp[g]), rep_inv)
            for a in rx_pre.get(need, ()):
                stab.append(concat(g, a))
        new.comps.append((xs + (x,), fs + (rep,)))
        new.groups.append(subgroup_from_elements(dP + dx, stab))
        new.degrees.append(degs + (dx,))
    new.tables[(p, x)] = table


_CHAINS: dict[tuple, Span] = {}


def chain(letters, boundary: SkeletalGroupoid | None = None, max_card: int | None = None) -> Span:
    """The span obtained by applying ``letters`` in order (first letter first)."""
    letters = tuple(letters)
    if not letters:
        if boundary is None:
            raise ValueError("empty chain needs a boundary groupoid")
        return identity_span(boundary, max_card)
    if len(letters) == 1:
        return letters[0]
    key = tuple(id(s) for s in letters)
    if key not in _CHAINS:
        span = ChainSpan(letters)
        _CHAINS[key] = span
        span._keepalive = letters
    return _CHAINS[key]


def compose_spans(T: Span, S: Span) -> Span:
    """``T∘S``: apply ``S`` first, then ``T``."""
    if S.target is not T.source:
        raise ValueError("mismatched boundary groupoids")
    max_card = min(S.max_card, T.max_card)
    return chain(S.letters + T.letters, S.source, max_card)


def word_span(word, max_card: int, colors: int = 1) -> Span:
    """Span of an operator word written outermost-first.

    Letters are ``'A'``/``'d'`` (annihilation) and ``'Ad'``/``'u'``
    (creation); with several colours use ``('A', c)`` / ``('Ad', c)``
    pairs, ``c`` counted from 1.
    """
    letters = []
    for w in reversed(list(word)):
        color = 0
        if isinstance(w, tuple):
            w, color = w[0], w[1] - 1
        if w in ("A", "d"):
            letters.append(annihilation_span(max_card, colors, color))
        elif w in ("Ad", "u", "A†"):
            letters.append(creation_span(max_card, colors, color))
        else:
            raise ValueError(f"unknown letter {w!r}")
    return chain(letters, fs_truncated(max_card, colors), max_card)


def dagger(S: Span) -> Span:
    """Converse span: the legs swapped.  Involutive on the nose."""
    if S._dagger is not None:
        return S._dagger
    if isinstance(S, ChainSpan):
        D = chain([dagger(x) for x in reversed(S.letters)])
    else:
        D = Span(S.apex, S.right, S.left, S.target, S.source, S.max_card, S.degree, f"({S.name})†")
    _set_dagger(S, D)
    return D


def direct_sum(*spans: Span) -> Span:
    """Disjoint union of apexes over common boundaries."""
    first = spans[0]
    for s in spans[1:]:
        if s.source is not first.source or s.target is not first.target:
            raise ValueError("boundary mismatch")
    apex = disjoint_union(*(s.apex for s in spans))
    owner = []
    for k, s in enumerate(spans):
        owner.extend((s, i) for i in range(len(s.apex)))
    left = Functor(apex, first.target, [s.left.comp_map[i] for s, i in owner], lambda j, h: owner[j][0].left(owner[j][1], h))
    right = Functor(apex, first.source, [s.right.comp_map[i] for s, i in owner], lambda j, h: owner[j][0].right(owner[j][1], h))
    name = " ⊕ ".join(s.name for s in spans)
    out = Span(apex, left, right, first.source, first.target,
               min(s.max_card for s in spans), max(s.degree for s in spans), name)
    out.summands = spans
    return out


def window_components(S: Span, bound: int) -> list[int]:
    """Apex components with at least one boundary image of size ≤ bound.

    Every intermediate set of a history built from ``d`` letters lies within
    ``d`` of either end, so these classes are computed exactly once
    ``bound = maxCard − d``.
    """
    return [
        i for i in range(len(S.apex))
        if min(S.source.size(S.right.comp_map[i]), S.target.size(S.left.comp_map[i])) <= bound
    ]


@dataclass
class SpanIsoWitness:
    """Component bijection with boundary conjugators and group isomorphisms."""

    component_map: dict[int, int]
    target_twist: dict[int, Perm]
    source_twist: dict[int, Perm]
    isomorphisms: dict[int, dict[Perm, Perm]]
    bound: int


def _span_signature(S: Span, i: int):
    G = S.apex.group(i)
    prof = sorted((cycle_type(S.left(i, h)), cycle_type(S.right(i, h))) for h in G.elements)
    return (S.left.comp_map[i], S.right.comp_map[i], len(G), tuple(prof))


def _span_pair(S: Span, i: int, T: Span, j: int):
    Gz, Hz = S.apex.group(i), T.apex.group(j)
    if len(Gz) != len(Hz):
        return None
    b, a = S.left.comp_map[i], S.right.comp_map[i]
    Ab, Aa = S.target.group(b), S.source.group(a)
    gens = Gz.generators
    gl = [S.left(i, h) for h in gens]
    gr = [S.right(i, h) for h in gens]
    rpre = T.right.preimages(j)
    for ta in Aa.elements:
        cands = [rpre.get(conjugate(ta, f), ()) for f in gr]
        if any(not c for c in cands):
            continue
        for choice in product(*cands):
            need = [T.left(j, c) for c in choice]
            tb = next((t for t in Ab.elements if all(conjugate(t, g) == n for g, n in zip(gl, need))), None)
            if tb is None:
                continue
            psi = extend_to_isomorphism(Gz, Hz, choice)
            if psi is not None:
                return tb, ta, psi
    return None


def match_components(left_items, right_items, signature, pair):
    """Greedy bijection between two component lists under an equivalence test."""
    if len(left_items) != len(right_items):
        return None
    pool: dict[object, list] = defaultdict(list)
    for j in right_items:
        pool[signature(1, j)].append(j)
    out = {}
    for i in left_items:
        bucket = pool.get(signature(0, i), [])
        for pos, j in enumerate(bucket):
            w = pair(i, j)
            if w is not None:
                out[i] = (j, w)
                bucket.pop(pos)
                break
        else:
            return None
    return out


def spans_isomorphic(S: Span, T: Span, bound: int | None = None) -> SpanIsoWitness | None:
    """Search for an isomorphism of spans inside the shared safe window."""
    if S.source is not T.source or S.target is not T.target:
        raise ValueError("spans have different boundaries")
    if bound is None:
        bound = min(S.max_card, T.max_card) - max(S.degree, T.degree)
    sides = (S, T)
    m = match_components(
        window_components(S, bound),
        window_components(T, bound),
        lambda k, i: _span_signature(sides[k], i),
        lambda i, j: _span_pair(S, i, T, j),
    )
    if m is None:
        return None
    return SpanIsoWitness(
        {i: j for i, (j, _) in m.items()},
        {i: w[0] for i, (_, w) in m.items()},
        {i: w[1] for i, (_, w) in m.items()},
        {i: w[2] for i, (_, w) in m.items()},
        bound,
    )


def check_span_witness(S: Span, T: Span, w: SpanIsoWitness) -> bool:
    for i, j in w.component_map.items():
        psi, tb, ta = w.isomorphisms[i], w.target_twist[i], w.source_twist[i]
        if T.left.comp_map[j] != S.left.comp_map[i] or T.right.comp_map[j] != S.right.comp_map[i]:
            return False
        for h in S.apex.group(i).elements:
            if T.left(j, psi[h]) != conjugate(tb, S.left(i, h)):
                return False
            if T.right(j, psi[h]) != conjugate(ta, S.right(i, h)):
                return False
    return True


@dataclass
class TamenessEntry:
    target: tuple[int, ...]
    source: tuple[int, ...]
    classes: int
    cardinality: Fraction


def tameness_report(S: Span, bound: int | None = None) -> list[TamenessEntry]:
    """Joint-preimage statistics per (target class, source class) pair."""
    if bound is None:
        bound = S.safe_bound
    acc: dict[tuple[int, int], list] = {}
    for i in window_components(S, bound):
        key = (S.left.comp_map[i], S.right.comp_map[i])
        ent = acc.setdefault(key, [0, Fraction(0)])
        ent[0] += 1
        ent[1] += Fraction(1, len(S.apex.group(i)))
    out = []
    for (b, a), (n, card) in sorted(acc.items()):
        out.append(TamenessEntry(S.target[b].profile, S.source[a].profile, n, card))
    return out


def classes_over(S: Span, b, a) -> list[int]:
    """Apex components lying over the given target and source classes."""
    bi, ai = S.target.index(b), S.source.index(a)
    return [i for i in range(len(S.apex)) if S.left.comp_map[i] == bi and S.right.comp_map[i] == ai]


def canon_extended(span: Span, tokens):
    """Bring a raw extended history to canonical form.

    ``tokens`` alternate junctions ``('j', comp, perm)`` and letter items
    ``('x', comp)``; consecutive junctions are composed (later after
    earlier).  Returns ``(c, f0, fk, trans)`` where ``c`` is the canonical
    apex component, ``f0 : a → right(c)`` and ``fk : left(c) → b`` the
    transported boundary junctions, and ``trans`` the per-letter transporter.
    """
    js, xs = _normalize(tokens)
    if not xs:
        comp, f = js[0]
        return comp, f, identity(len(f)), ()
    fs = tuple(f for _, f in js[1:-1])
    c, trans = span.canonicalize(tuple(xs), fs)
    letters = span.letters
    f0 = compose(letters[0].right(xs[0], trans[0]), js[0][1])
    fk = compose(js[-1][1], inverse(letters[-1].left(xs[-1], trans[-1])))
    return c, f0, fk, trans


def _normalize(tokens):
    js: list[tuple[int, Perm]] = []
    xs: list[int] = []
    pending = None
    for tok in tokens:
        if tok[0] == "j":
            _, comp, f = tok
            if pending is None:
                pending = (comp, f)
            else:
                if pending[0] != comp:
                    raise ValueError("junction components disagree")
                pending = (comp, compose(f, pending[1]))
        else:
            if pending is None:
                raise ValueError("raw history must start with a junction")
            js.append(pending)
            pending = None
            xs.append(tok[1])
    if pending is None:
        raise ValueError("raw history must end with a junction")
    js.append(pending)
    return js, xs


def expansion_tokens(span: Span, c: int):
    """Tokens of the canonical history of apex component ``c``."""
    xs, fs = span.expand(c)
    letters = span.letters
    toks = []
    for k, x in enumerate(xs):
        if k:
            comp = letters[k].right.comp_map[x]
            toks.append(("j", comp, fs[k - 1]))
        toks.append(("x", x))
    return toks
