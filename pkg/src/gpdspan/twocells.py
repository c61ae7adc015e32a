"""Spans of spans: 2-cells between spans with the same boundaries.

A 2-cell ``α : X ⇒ Y`` between spans ``B <-G- X -F-> A`` and
``B <-J- Y -K-> A`` has an apex ``Z``, functors ``S : Z → X``, ``T : Z → Y``
and natural isomorphisms ``μ : G∘S ⇒ J∘T`` (on ``B``) and
``ν : F∘S ⇒ K∘T`` (on ``A``).  In the skeletal picture ``μ`` and ``ν`` are
one boundary automorphism per apex component.

Most constructions describe each apex object by a pair of *raw histories*
(one in ``X``, one in ``Y``) with shared boundary objects, and let
:func:`two_cell_from_raw` canonicalize them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .groupoid import (
    Component,
    Functor,
    NaturalIso,
    SkeletalGroupoid,
    compose_functors,
    disjoint_union,
    empty_groupoid,
    fs_truncated,
    identity_functor,
)
from .groups import (
    Perm,
    compose,
    concat,
    conjugate,
    cycle_type,
    extend_to_isomorphism,
    identity,
    inverse,
    shift,
    transposition,
)
from .spans import (
    ChainSpan,
    Span,
    canon_extended,
    chain,
    expansion_tokens,
    match_components,
    word_span,
)


class TwoCell:
    def __init__(self, src: Span, tgt: Span, apex: SkeletalGroupoid, S: Functor, T: Functor,
                 mu, nu, degree: int, name: str = ""):
        if src.source is not tgt.source or src.target is not tgt.target:
            raise ValueError("source and target spans have different boundaries")
        self.src = src
        self.tgt = tgt
        self.apex = apex
        self.S = S
        self.T = T
        self.mu: tuple[Perm, ...] = tuple(mu)
        self.nu: tuple[Perm, ...] = tuple(nu)
        self.degree = degree
        self.name = name

    def __repr__(self) -> str:
        return f"TwoCell({self.name or '?'}: {self.src.name} ⇒ {self.tgt.name}, {len(self.apex)} classes)"

    @property
    def max_card(self) -> int:
        return min(self.src.max_card, self.tgt.max_card)

    def boundary(self, z: int) -> tuple[int, int]:
        """(target class, source class) of apex component ``z``."""
        x = self.S.comp_map[z]
        return self.src.left.comp_map[x], self.src.right.comp_map[x]

    def mu_iso(self) -> NaturalIso:
        return NaturalIso(compose_functors(self.src.left, self.S), compose_functors(self.tgt.left, self.T), self.mu)

    def nu_iso(self) -> NaturalIso:
        return NaturalIso(compose_functors(self.src.right, self.S), compose_functors(self.tgt.right, self.T), self.nu)

    def is_valid(self) -> bool:
        return (self.S.is_functor() and self.T.is_functor()
                and self.mu_iso().is_natural() and self.nu_iso().is_natural())


def _table_functor(source, target, comp_map, tables) -> Functor:
    f = Functor(source, target, comp_map, lambda i, h: tables[i][h])
    f._tables = dict(enumerate(tables))
    return f


def two_cell_from_raw(src: Span, tgt: Span, Z: SkeletalGroupoid, raw_obj, raw_hom,
                      degree: int, name: str = "") -> TwoCell:
    """Build a 2-cell from raw histories.

    Args:
        raw_obj: ``z ↦ (src_tokens, tgt_tokens)``, token lists as accepted by
            :func:`gpdspan.spans.canon_extended`, with equal boundary objects.
        raw_hom: ``(z, h) ↦ (src_parts, tgt_parts, b_part)``: the automorphism
            ``h`` of ``z`` acting letter by letter on both histories, plus its
            action on the target boundary object.
    """
    s_map, t_map, mu, nu, s_tabs, t_tabs = [], [], [], [], [], []
    for z in range(len(Z)):
        ts, tt = raw_obj(z)
        cS, f0S, fkS, trS = canon_extended(src, ts)
        cT, f0T, fkT, trT = canon_extended(tgt, tt)
        s_map.append(cS)
        t_map.append(cT)
        mu.append(compose(inverse(fkT), fkS))
        nu.append(compose(f0T, inverse(f0S)))
        s_tab, t_tab = {}, {}
        for h in Z.group(z).elements:
            ps, pt, pb = raw_hom(z, h)
            s_tab[h] = _transport(trS, ps, pb)
            t_tab[h] = _transport(trT, pt, pb)
        s_tabs.append(s_tab)
        t_tabs.append(t_tab)
    S = _table_functor(Z, src.apex, s_map, s_tabs)
    T = _table_functor(Z, tgt.apex, t_map, t_tabs)
    return TwoCell(src, tgt, Z, S, T, mu, nu, degree, name)


def _transport(trans, parts, b_part) -> Perm:
    if not trans:
        return b_part
    out: Perm = ()
    for t, p in zip(trans, parts):
        out = concat(out, conjugate(t, p))
    return out


def _history(span: Span, c: int, f0: Perm | None = None, fk: Perm | None = None) -> list:
    """Tokens of the canonical history ``c`` with optional boundary junctions."""
    a, b = span.right.comp_map[c], span.left.comp_map[c]
    if f0 is None:
        f0 = span.source.group(a).identity
    if fk is None:
        fk = span.target.group(b).identity
    return [("j", a, f0)] + expansion_tokens(span, c) + [("j", b, fk)]


def identity_two_cell(X: Span) -> TwoCell:
    ids = [identity(X.target.group(X.left.comp_map[i]).degree) for i in range(len(X.apex))]
    idr = [identity(X.source.group(X.right.comp_map[i]).degree) for i in range(len(X.apex))]
    idf = identity_functor(X.apex)
    return TwoCell(X, X, X.apex, idf, idf, ids, idr, X.degree, f"id[{X.name}]")


def zero_two_cell(X: Span, Y: Span) -> TwoCell:
    E = empty_groupoid()
    return TwoCell(X, Y, E, Functor(E, X.apex, [], None), Functor(E, Y.apex, [], None), [], [],
                   max(X.degree, Y.degree), "0")


def converse_two_cell(a: TwoCell) -> TwoCell:
    return TwoCell(a.tgt, a.src, a.apex, a.T, a.S, [inverse(m) for m in a.mu], [inverse(n) for n in a.nu],
                   a.degree, f"({a.name})†")


def two_cell_sum(*cells: TwoCell) -> TwoCell:
    first = cells[0]
    for c in cells[1:]:
        if c.src is not first.src or c.tgt is not first.tgt:
            raise ValueError("2-cells have different source or target spans")
    apex = disjoint_union(*(c.apex for c in cells))
    owner = [(c, z) for c in cells for z in range(len(c.apex))]
    S = Functor(apex, first.src.apex, [c.S.comp_map[z] for c, z in owner], lambda j, h: owner[j][0].S(owner[j][1], h))
    T = Functor(apex, first.tgt.apex, [c.T.comp_map[z] for c, z in owner], lambda j, h: owner[j][0].T(owner[j][1], h))
    return TwoCell(first.src, first.tgt, apex, S, T,
                   [c.mu[z] for c, z in owner], [c.nu[z] for c, z in owner],
                   max(c.degree for c in cells), " + ".join(c.name for c in cells))


def vertical_compose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """``β·α``: first ``α : X ⇒ Y``, then ``β : Y ⇒ W``."""
    if alpha.tgt is not beta.src:
        raise ValueError("target span of the first 2-cell must be the source of the second")
    X, Y, W = alpha.src, alpha.tgt, beta.tgt
    L1 = Span(alpha.apex, alpha.T, alpha.S, X.apex, Y.apex, 0, 0, "α")
    L2 = Span(beta.apex, beta.T, beta.S, Y.apex, W.apex, 0, 0, "β")
    V = ChainSpan((L1, L2))
    mu, nu = [], []
    for v in range(len(V.apex)):
        (z1, z2), (f,) = V.apex[v].label
        y = alpha.T.comp_map[z1]
        mu.append(compose(beta.mu[z2], compose(Y.left(y, f), alpha.mu[z1])))
        nu.append(compose(beta.nu[z2], compose(Y.right(y, f), alpha.nu[z1])))
    return TwoCell(X, W, V.apex, V.right, V.left, mu, nu, max(alpha.degree, beta.degree),
                   f"{beta.name}·{alpha.name}")


def whisker(alpha: TwoCell, outer=(), inner=()) -> TwoCell:
    """``L∘α∘R`` for letter sequences ``outer`` (L) and ``inner`` (R).

    Both sequences list letters in the order applied, as in ``Span.letters``.
    """
    outer, inner = tuple(outer), tuple(inner)
    if not outer and not inner:
        return alpha
    X, Y = alpha.src, alpha.tgt
    boundary = inner[0].source if inner else X.source
    src = chain(inner + X.letters + outer, boundary, X.max_card)
    tgt = chain(inner + Y.letters + outer, boundary, Y.max_card)
    zl = Span(alpha.apex, compose_functors(X.left, alpha.S), compose_functors(X.right, alpha.S),
              X.source, X.target, X.max_card, alpha.degree, "Z")
    W = ChainSpan(inner + (zl,) + outer)
    p = len(inner)

    def raw_obj(w):
        xs, fs = W.expand(w)
        z = xs[p]
        x, y = alpha.S.comp_map[z], alpha.T.comp_map[z]
        s_mid = expansion_tokens(X, x)
        t_mid = ([("j", Y.right.comp_map[y], alpha.nu[z])] + expansion_tokens(Y, y)
                 + [("j", X.left.comp_map[x], inverse(alpha.mu[z]))])
        ts, tt = [], []
        a, b = W.right.comp_map[w], W.left.comp_map[w]
        for toks in (ts, tt):
            toks.append(("j", a, W.source.group(a).identity))
        for k, xk in enumerate(xs):
            if k:
                j = ("j", W.letters[k].right.comp_map[xk], fs[k - 1])
                ts.append(j)
                tt.append(j)
            if k == p:
                ts.extend(s_mid)
                tt.extend(t_mid)
            else:
                ts.append(("x", xk))
                tt.append(("x", xk))
        for toks in (ts, tt):
            toks.append(("j", b, W.target.group(b).identity))
        return ts, tt

    def raw_hom(w, h):
        xs, _ = W.expand(w)
        parts = W.split(w, h)
        z, hz = xs[p], parts[p]
        x, y = alpha.S.comp_map[z], alpha.T.comp_map[z]
        ps = parts[:p] + X.split(x, alpha.S(z, hz)) + parts[p + 1:]
        pt = parts[:p] + Y.split(y, alpha.T(z, hz)) + parts[p + 1:]
        return ps, pt, W.left(w, h)

    deg = alpha.degree + sum(s.degree for s in inner + outer)
    return two_cell_from_raw(src, tgt, W.apex, raw_obj, raw_hom, deg, alpha.name)


def horizontal_compose(beta: TwoCell, alpha: TwoCell) -> TwoCell:
    """``β∘α`` for ``α : X ⇒ X'`` (applied first) and ``β : Y ⇒ Y'``."""
    left = whisker(alpha, outer=beta.src.letters)
    right = whisker(beta, inner=alpha.tgt.letters)
    return vertical_compose(right, left)


# generators ---------------------------------------------------------------

def _fs(max_card: int):
    return fs_truncated(max_card)


def _cup_same(N: int) -> TwoCell:
    """id ⇒ A∘A†: add a point and remove that same point."""
    B = _fs(N)
    src = chain((), B, N)
    tgt = word_span("du", N)
    Z = _fs(N - 1)

    def raw_obj(n):
        e = identity(n)
        return ([("j", n, e)],
                [("j", n, e), ("x", n), ("j", n + 1, identity(n + 1)), ("x", n), ("j", n, e)])

    return two_cell_from_raw(src, tgt, Z, raw_obj, lambda n, h: ((), (h, h), h), 2, "i_id")


def _cross_mixed(N: int) -> TwoCell:
    """A†∘A ⇒ A∘A†: remove a point then add one, versus add then remove another."""
    src = word_span("ud", N)
    tgt = word_span("du", N)
    Z = _fs(N - 2)

    def raw_obj(m):
        e1, e0 = identity(m + 1), identity(m)
        s = [("j", m + 1, e1), ("x", m), ("j", m, e0), ("x", m), ("j", m + 1, e1)]
        t = [("j", m + 1, e1), ("x", m + 1), ("j", m + 2, transposition(m + 2, m, m + 1)),
             ("x", m + 1), ("j", m + 1, e1)]
        return s, t

    def raw_hom(m, h):
        h1 = shift(h)
        return (h, h), (h1, h1), h1

    return two_cell_from_raw(src, tgt, Z, raw_obj, raw_hom, 2, "i_A†A")


def _cup_mark(N: int) -> TwoCell:
    """id ⇒ A†∘A: remove a point and put it back."""
    B = _fs(N)
    src = chain((), B, N)
    tgt = word_span("ud", N)
    Z = _fs(N - 1)

    def raw_obj(m):
        e1, e0 = identity(m + 1), identity(m)
        return ([("j", m + 1, e1)],
                [("j", m + 1, e1), ("x", m), ("j", m, e0), ("x", m), ("j", m + 1, e1)])

    return two_cell_from_raw(src, tgt, Z, raw_obj, lambda m, h: ((), (h, h), shift(h)), 2, "η_R")


def symmetric_action(perm: Perm, direction: str, N: int) -> TwoCell:
    """Permute the order in which ``len(perm)`` points are added or removed.

    ``direction`` is ``'d'`` for a power of A and ``'u'`` for a power of A†.
    The permutation acts on the last ``k`` points of the larger boundary set.
    """
    k = len(perm)
    X = word_span(direction * k, N)

    def hat(m):
        return tuple(range(m)) + tuple(m + v for v in perm)

    def raw_obj(c):
        a, b = X.right.comp_map[c], X.left.comp_map[c]
        if direction == "d":
            m = X.target.size(b)
            return _history(X, c), _history(X, c, f0=hat(m))
        m = X.source.size(a)
        return _history(X, c), _history(X, c, fk=inverse(hat(m)))

    def raw_hom(c, h):
        parts = X.split(c, h)
        return parts, parts, X.left(c, h)

    return two_cell_from_raw(X, X, X.apex, raw_obj, raw_hom, k, f"μ̂{perm}")


def generator_two_cell(name: str, N: int, perm: Perm | None = None, direction: str = "d") -> TwoCell:
    """Named generator 2-cell at truncation ``N``.

    Names: ``i_id`` (= ``eta_L``), ``i_id_dagger`` (= ``eps_R``),
    ``i_AdagA``, ``i_AdagA_dagger``, ``eta_R``, ``eps_L`` and ``sym``.
    """
    need = 2 if name != "sym" else len(perm or ())
    if N < need:
        raise ValueError(f"window too small: maxCard {N} < required degree {need}")
    if name in ("i_id", "eta_L"):
        return _cup_same(N)
    if name in ("i_id_dagger", "eps_R"):
        return converse_two_cell(_cup_same(N))
    if name == "i_AdagA":
        return _cross_mixed(N)
    if name == "i_AdagA_dagger":
        return converse_two_cell(_cross_mixed(N))
    if name == "eta_R":
        return _cup_mark(N)
    if name == "eps_L":
        return converse_two_cell(_cup_mark(N))
    if name == "sym":
        if perm is None:
            raise ValueError("sym needs a permutation")
        return symmetric_action(tuple(perm), direction, N)
    raise ValueError(f"unknown generator {name!r}")


# equivalence --------------------------------------------------------------

@dataclass
class TwoCellEquivalenceWitness:
    component_map: dict[int, int]
    sigma: dict[int, Perm]
    tau: dict[int, Perm]
    isomorphisms: dict[int, dict[Perm, Perm]]
    bound: int


def window_cells(a: TwoCell, bound: int) -> list[int]:
    out = []
    for z in range(len(a.apex)):
        b, s = a.boundary(z)
        if min(a.src.target.size(b), a.src.source.size(s)) <= bound:
            out.append(z)
    return out


def _cell_signature(a: TwoCell, z: int):
    G = a.apex.group(z)
    prof = sorted((cycle_type(a.S(z, h)), cycle_type(a.T(z, h))) for h in G.elements)
    return (a.S.comp_map[z], a.T.comp_map[z], len(G), tuple(prof))


def _joint_preimages(Y: Span, y: int) -> dict[tuple[Perm, Perm], list[Perm]]:
    out: dict = {}
    for t in Y.apex.group(y).elements:
        out.setdefault((Y.left(y, t), Y.right(y, t)), []).append(t)
    return out


def _cell_pair(a: TwoCell, i: int, b: TwoCell, j: int, cache: dict):
    Gz, Hz = a.apex.group(i), b.apex.group(j)
    if len(Gz) != len(Hz):
        return None
    X, Y = a.src, a.tgt
    x, y = a.S.comp_map[i], a.T.comp_map[i]
    if y not in cache:
        cache[y] = _joint_preimages(Y, y)
    jk = cache[y]
    key = ("st", j)
    if key not in cache:
        pre: dict = {}
        for h in Hz.elements:
            pre.setdefault((b.S(j, h), b.T(j, h)), []).append(h)
        cache[key] = pre
    st_pre = cache[key]
    gens = Gz.generators
    sg = [a.S(i, h) for h in gens]
    tg = [a.T(i, h) for h in gens]
    mu_inv, nu_inv = inverse(a.mu[i]), inverse(a.nu[i])
    for sigma in X.apex.group(x).elements:
        need_j = compose(b.mu[j], compose(X.left(x, sigma), mu_inv))
        need_k = compose(b.nu[j], compose(X.right(x, sigma), nu_inv))
        for tau in jk.get((need_j, need_k), ()):
            cands = [st_pre.get((conjugate(sigma, s), conjugate(tau, t)), ()) for s, t in zip(sg, tg)]
            if any(not c for c in cands):
                continue
            for choice in product(*cands):
                psi = extend_to_isomorphism(Gz, Hz, choice)
                if psi is not None:
                    return sigma, tau, psi
    return None


def equivalent_two_cells(a: TwoCell, b: TwoCell, bound: int | None = None) -> TwoCellEquivalenceWitness | None:
    """Decide equivalence of two parallel 2-cells inside the shared safe window."""
    if a.src is not b.src or a.tgt is not b.tgt:
        raise ValueError("2-cells are not parallel")
    if bound is None:
        bound = min(a.max_card, b.max_card) - max(a.degree, b.degree)
    cells = (a, b)
    cache: dict = {}
    m = match_components(
        window_cells(a, bound),
        window_cells(b, bound),
        lambda k, z: _cell_signature(cells[k], z),
        lambda i, j: _cell_pair(a, i, b, j, cache),
    )
    if m is None:
        return None
    return TwoCellEquivalenceWitness(
        {i: j for i, (j, _) in m.items()},
        {i: w[0] for i, (_, w) in m.items()},
        {i: w[1] for i, (_, w) in m.items()},
        {i: w[2] for i, (_, w) in m.items()},
        bound,
    )


def check_equivalence_witness(a: TwoCell, b: TwoCell, w: TwoCellEquivalenceWitness) -> bool:
    """Re-verify the pasting conditions of a witness component by component."""
    X, Y = a.src, a.tgt
    for i, j in w.component_map.items():
        sigma, tau, psi = w.sigma[i], w.tau[i], w.isomorphisms[i]
        x, y = a.S.comp_map[i], a.T.comp_map[i]
        if b.S.comp_map[j] != x or b.T.comp_map[j] != y:
            return False
        if b.mu[j] != compose(compose(Y.left(y, tau), a.mu[i]), inverse(X.left(x, sigma))):
            return False
        if b.nu[j] != compose(compose(Y.right(y, tau), a.nu[i]), inverse(X.right(x, sigma))):
            return False
        for h in a.apex.group(i).generators:
            if b.S(j, psi[h]) != conjugate(sigma, a.S(i, h)) or b.T(j, psi[h]) != conjugate(tau, a.T(i, h)):
                return False
    return True


def is_zero(a: TwoCell, bound: int | None = None) -> bool:
    if bound is None:
        bound = a.max_card - a.degree
    return not window_cells(a, bound)


def restrict_two_cell(a: TwoCell, bound: int) -> TwoCell:
    """Keep only the apex components whose boundary classes fit under ``bound``."""
    keep = window_cells(a, bound)
    apex = SkeletalGroupoid([Component(a.apex[z].label, a.apex[z].profile, a.apex[z].group) for z in keep],
                            a.apex.kind)
    S = Functor(apex, a.src.apex, [a.S.comp_map[z] for z in keep], lambda i, h: a.S(keep[i], h))
    T = Functor(apex, a.tgt.apex, [a.T.comp_map[z] for z in keep], lambda i, h: a.T(keep[i], h))
    return TwoCell(a.src, a.tgt, apex, S, T, [a.mu[z] for z in keep], [a.nu[z] for z in keep], a.degree, a.name)
