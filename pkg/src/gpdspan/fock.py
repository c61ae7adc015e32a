"""Linearization of spans: rational matrices over iso-classes and blocks over Young diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .groupoid import Functor, SkeletalGroupoid, fs_truncated, identity_functor, plus_one, point
from .spans import Span, annihilation_span, compose_spans, creation_span, zero_span
from .young import (
    CharacterVector,
    Partition,
    branch_down,
    decompose_character,
    partitions_of,
    path_count,
    pieri_strips,
    skew_character,
    specht_generators,
    tensor_with_permutation_rep,
)


@dataclass
class QMatrix:
    """Exact rational matrix with boundary-class labels."""

    rows: list[tuple[int, ...]]
    cols: list[tuple[int, ...]]
    entries: list[list[Fraction]]

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise ValueError("inner labels differ")
        ent = [[sum((r[k] * other.entries[k][j] for k in range(len(self.cols))), Fraction(0))
                for j in range(len(other.cols))] for r in self.entries]
        return QMatrix(self.rows, other.cols, ent)

    def __add__(self, other: QMatrix) -> QMatrix:
        self._same(other)
        return QMatrix(self.rows, self.cols, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: QMatrix) -> QMatrix:
        self._same(other)
        return QMatrix(self.rows, self.cols, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def _same(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("labels differ")

    def entry(self, row, col) -> Fraction:
        return self.entries[self.rows.index(tuple(row))][self.cols.index(tuple(col))]

    def restrict(self, rows, cols) -> QMatrix:
        ri = [self.rows.index(r) for r in rows]
        ci = [self.cols.index(c) for c in cols]
        return QMatrix(list(rows), list(cols), [[self.entries[i][j] for j in ci] for i in ri])


def _classes(G: SkeletalGroupoid, bound: int) -> list[tuple[int, ...]]:
    return [c.profile for c in G.components if c.size <= bound]


def degroupoidify_span(S: Span, bound: int | None = None) -> QMatrix:
    """Matrix with entry[b][a] = Σ |Aut a| / |Aut x| over apex classes x from a to b.

    Rows and columns run over boundary classes of size ≤ ``bound``
    (default: the span's safe bound).
    """
    if bound is None:
        bound = S.safe_bound
    rows, cols = _classes(S.target, bound), _classes(S.source, bound)
    ri = {p: i for i, p in enumerate(rows)}
    ci = {p: j for j, p in enumerate(cols)}
    ent = [[Fraction(0)] * len(cols) for _ in rows]
    for x in range(len(S.apex)):
        b = S.target[S.left.comp_map[x]]
        a = S.source[S.right.comp_map[x]]
        if b.profile in ri and a.profile in ci:
            ent[ri[b.profile]][ci[a.profile]] += Fraction(len(a.group), len(S.apex.group(x)))
    return QMatrix(rows, cols, ent)


# dimension blocks ---------------------------------------------------------

@dataclass
class DimBlock:
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: list[list[int]]

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: DimBlock) -> DimBlock:
        if self.cols != other.rows:
            raise ValueError("inner labels differ")
        ent = [[sum(r[k] * other.entries[k][j] for k in range(len(self.cols))) for j in range(len(other.cols))]
               for r in self.entries]
        return DimBlock(self.rows, other.cols, ent)

    def entry(self, row, col) -> int:
        return self.entries[self.rows.index(tuple(row))][self.cols.index(tuple(col))]


def path_block(i: int, j: int) -> DimBlock:
    """Block M_{i,j}: entry (μ, λ) counts paths from μ ⊢ i up to λ ⊢ j."""
    if j < i or i < 0:
        raise ValueError("need 0 ≤ i ≤ j")
    rows, cols = partitions_of(i), partitions_of(j)
    return DimBlock(rows, cols, [[path_count(m, l) for l in cols] for m in rows])


def number_block(n: int) -> DimBlock:
    """Remove-then-add block: shared lower neighbours of λ and μ."""
    P = partitions_of(n)
    ent = [[len(set(branch_down(l)) & set(branch_down(m))) for m in P] for l in P]
    return DimBlock(P, P, ent)


@dataclass
class EquivalenceReport:
    n: int
    passed: bool
    number_block: list[list[int]]
    tensor_block: list[list[int]]


def regular_equivalence_check(n: int) -> EquivalenceReport:
    """Compare the number-operator block with tensoring by the permutation representation."""
    if not 1 <= n <= 6:
        raise ValueError("n must lie in 1..6")
    P = partitions_of(n)
    nb = number_block(n).as_lists()
    tb = []
    for lam in P:
        dec = tensor_with_permutation_rep(lam)
        tb.append([dec[mu] for mu in P])
    return EquivalenceReport(n, nb == tb, nb, tb)


# module blocks ------------------------------------------------------------

@dataclass
class ModuleBlock:
    dims: DimBlock
    characters: dict[tuple[Partition, Partition], CharacterVector]
    k: int

    def character(self, mu, lam) -> CharacterVector:
        return self.characters[(tuple(mu), tuple(lam))]


MODULE_MAX = 4


def module_block(k: int, i: int, max_k: int = MODULE_MAX, max_i: int = MODULE_MAX) -> ModuleBlock:
    """Block of the k-fold raise from stage i, each entry carrying its S_k character."""
    if k > max_k or i > max_i:
        raise ValueError("block beyond configured bounds")
    dims = path_block(i, i + k)
    chars = {}
    for mu in dims.rows:
        for lam in dims.cols:
            if path_count(mu, lam):
                chars[(mu, lam)] = skew_character(lam, mu)
    return ModuleBlock(dims, chars, k)


@dataclass
class MuAction:
    k: int
    mu: Partition
    lam: Partition
    matrices: list
    character: CharacterVector
    decomposition: dict[Partition, int]

    @property
    def dimension(self) -> int:
        return self.character.dimension


def explicit_mu_action(k: int, mu: Partition, lam: Partition, max_size: int = 6) -> MuAction:
    """S_k acting on Hom_{S_i}(S^μ, Res S^λ) through the last k points.

    Built directly from Young's natural representations: the intertwiner
    space is solved exactly, then each adjacent transposition of the last
    ``k`` points acts by post-composition.
    """
    i, n = sum(mu), sum(lam)
    if n != i + k:
        raise ValueError("|λ| must equal |μ| + k")
    if n > max_size:
        raise ValueError(f"shape of size {n} exceeds the configured bound {max_size}")
    SL = specht_generators(tuple(lam), max_size)
    SM = specht_generators(tuple(mu), max_size) if mu else None
    dl = SL.dimension
    dm = SM.dimension if SM else 1
    X = sympy.Matrix(dl, dm, sympy.symbols(f"x0:{dl * dm}"))
    eqs = []
    for s in range(max(i - 1, 0)):
        eqs.extend(X * SM.matrices[s] - SL.matrices[s] * X)
    unknowns = list(X)
    if eqs:
        A, _ = sympy.linear_eq_to_matrix(eqs, unknowns)
        basis = A.nullspace()
    else:
        basis = [sympy.Matrix([1 if t == j else 0 for t in range(dl * dm)]) for j in range(dl * dm)]
    B = sympy.Matrix.hstack(*basis) if basis else sympy.zeros(dl * dm, 0)
    mats = []
    for t in range(k - 1):
        g = SL.matrices[i + t]
        cols = []
        for b in basis:
            Y = g * sympy.Matrix(dl, dm, list(b))
            sol, _ = B.gauss_jordan_solve(sympy.Matrix(list(Y)))
            cols.append(sol)
        mats.append(sympy.Matrix.hstack(*cols) if cols else sympy.zeros(0, 0))
    d = len(basis)

    def act(perm):
        out = sympy.eye(d)
        p = list(perm)
        word = []
        for a in range(len(p)):
            for b in range(len(p) - 1 - a):
                if p[b] > p[b + 1]:
                    p[b], p[b + 1] = p[b + 1], p[b]
                    word.append(b)
        for w in reversed(word):
            out = out * mats[w]
        return out

    def value(rho):
        perm, s = [], 0
        for r in rho:
            perm += [s + (j + 1) % r for j in range(r)]
            s += r
        return int(act(perm).trace()) if d else 0

    chi = CharacterVector.from_function(k, value)
    return MuAction(k, tuple(mu), tuple(lam), mats, chi, decompose_character(chi))


def _isotypic_block(k: int, i: int, target: Partition) -> DimBlock:
    mb = module_block(k, i)
    ent = []
    for mu in mb.dims.rows:
        row = []
        for lam in mb.dims.cols:
            ch = mb.characters.get((mu, lam))
            row.append(decompose_character(ch).get(target, 0) if ch else 0)
        ent.append(row)
    return DimBlock(mb.dims.rows, mb.dims.cols, ent)


def symmetrized_block(k: int, i: int) -> DimBlock:
    """Multiplicity of the trivial S_k representation in each entry."""
    return _isotypic_block(k, i, (k,) if k else ())


def antisymmetrized_block(k: int, i: int) -> DimBlock:
    """Multiplicity of the sign S_k representation in each entry."""
    return _isotypic_block(k, i, (1,) * k)


# the printed alternative for the k = 2 blocks out of stage 2
PRINTED_SYM_2_2 = [[1, 1, 1, 1, 0], [0, 1, 1, 1, 1]]
PRINTED_ANTISYM_2_2 = [[0, 1, 0, 0, 0], [0, 0, 0, 1, 0]]


@dataclass
class ConventionReport:
    scalar: int
    convention: str
    computed_sym: list[list[int]]
    computed_antisym: list[list[int]]
    printed_sym: list[list[int]]
    printed_antisym: list[list[int]]
    shared_entries: list[tuple[Partition, Partition]]


def convention_report() -> ConventionReport:
    """Decide which S_2 action the vertical-strip entry ((2),(2,1,1)) carries."""
    act = explicit_mu_action(2, (2,), (2, 1, 1))
    scalar = int(act.matrices[0][0, 0])
    conv = "skew-specht" if scalar == -1 else "printed"
    sym = symmetrized_block(2, 2).as_lists()
    anti = antisymmetrized_block(2, 2).as_lists()
    rows, cols = partitions_of(2), partitions_of(4)
    shared = []
    for r, mu in enumerate(rows):
        for c, lam in enumerate(cols):
            horizontal = lam in pieri_strips(mu, 2, "horizontal")
            square = path_count(mu, lam) == 2
            if horizontal or square:
                shared.append((mu, lam))
    return ConventionReport(scalar, conv, sym, anti, PRINTED_SYM_2_2, PRINTED_ANTISYM_2_2, shared)


# Khovanov isomorphism, dimension level -------------------------------------

def strip_matrix(s: int, k: int, direction: str) -> sympy.Matrix:
    """Raising matrix by a k-strip from stage s: rows λ ⊢ s+k, cols μ ⊢ s."""
    rows = partitions_of(s + k) if s + k >= 0 else ()
    cols = partitions_of(s) if s >= 0 else ()
    M = sympy.zeros(len(rows), len(cols))
    if k < 0:
        return M
    for j, mu in enumerate(cols):
        for lam in pieri_strips(mu, k, direction):
            M[rows.index(lam), j] = 1
    return M


def _raise_e(s: int, m: int) -> sympy.Matrix:
    return strip_matrix(s, m, "vertical")


def _lower_h(s: int, n: int) -> sympy.Matrix:
    """Lowering by a horizontal n-strip from stage s (transpose of raising)."""
    if s - n < 0:
        return sympy.zeros(0, len(partitions_of(s)))
    return strip_matrix(s - n, n, "horizontal").T


@dataclass
class KhovanovReport:
    n: int
    m: int
    stages: list[int]
    passed: bool
    failures: list[int]


def khovanov_iso_check(n: int, m: int, stage_max: int) -> KhovanovReport:
    """Block equality of S^n_- Λ^m_+ and Λ^m_+ S^n_- ⊕ Λ^{m-1}_+ S^{n-1}_- per stage."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    failures = []
    for s in range(stage_max + 1):
        lhs = _lower_h(s + m, n) * _raise_e(s, m)
        r1 = _raise_e(s - n, m) * _lower_h(s, n) if s - n >= 0 else sympy.zeros(lhs.rows, lhs.cols)
        r2 = (_raise_e(s - n + 1, m - 1) * _lower_h(s, n - 1)) if s - n + 1 >= 0 else sympy.zeros(lhs.rows, lhs.cols)
        if lhs != r1 + r2:
            failures.append(s)
    return KhovanovReport(n, m, list(range(stage_max + 1)), not failures, failures)


# stuff types ---------------------------------------------------------------

def identity_stuff_type(max_card: int) -> Span:
    """Finite sets over themselves."""
    G = fs_truncated(max_card)
    pt = point()
    to_pt = Functor(G, pt, [0] * len(G), lambda i, h: ())
    return Span(G, identity_functor(G), to_pt, pt, G, max_card, 0, "E")


def pointed_set_stuff_type(max_card: int) -> Span:
    """Sets with a chosen element, lying over the underlying set."""
    G = fs_truncated(max_card)
    X = fs_truncated(max_card - 1)
    pt = point()
    to_pt = Functor(X, pt, [0] * len(X), lambda i, h: ())
    return Span(X, plus_one(X, G), to_pt, pt, G, max_card, 0, "Z·E")


def empty_stuff_type(max_card: int) -> Span:
    return zero_span(point(), fs_truncated(max_card), max_card)


def stuff_type_gf(psi: Span, max_n: int) -> list[Fraction]:
    """Coefficients of the generating function, up to z^max_n."""
    if psi.source is not point():
        raise ValueError("not a stuff type")
    if max_n > psi.safe_bound:
        raise ValueError(f"window too small: coefficients are exact only up to {psi.safe_bound}")
    out = [Fraction(0)] * (max_n + 1)
    for x in range(len(psi.apex)):
        n = psi.target.size(psi.left.comp_map[x])
        if n <= max_n:
            out[n] += Fraction(1, len(psi.apex.group(x)))
    return out


def act_on_stuff_type(S: Span, psi: Span) -> Span:
    if psi.target is not S.source:
        raise ValueError("stuff type does not live over the span's source")
    return compose_spans(S, psi)


def vacuum_moment(k: int, window: int) -> Fraction:
    """⟨0| (a + a†)^k |0⟩ from the linearized creation and annihilation spans."""
    if window < k:
        raise ValueError(f"window too small: need {k}, have {window}")
    a = degroupoidify_span(annihilation_span(window), window)
    ad = degroupoidify_span(creation_span(window), window)
    phi = a + ad
    vec = [[Fraction(1)] + [Fraction(0)] * (len(phi.cols) - 1)]
    state = QMatrix(phi.cols, [(0,)], [[v] for v in vec[0]])
    for _ in range(k):
        state = phi @ state
    return state.entries[0][0]
