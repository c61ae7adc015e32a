"""Partitions, Young's lattice and symmetric-group characters.

Partitions are weakly decreasing tuples of positive integers, always listed
in descending lexicographic order.  Characters come from the
Murnaghan–Nakayama rule, which also handles skew shapes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import factorial

import sympy

from .groups import sign

Partition = tuple[int, ...]


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = ()

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def normalize(p) -> Partition:
    p = tuple(int(v) for v in p)
    if any(a < b for a, b in zip(p, p[1:])) or any(v < 0 for v in p):
        raise ValueError(f"not a partition: {p}")
    return tuple(v for v in p if v > 0)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    def gen(n, cap):
        if n == 0:
            yield ()
            return
        for first in range(min(n, cap), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def contains(lam: Partition, mu: Partition) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def branch_down(lam: Partition) -> list[Partition]:
    """Remove one box, in every possible way."""
    out = []
    for i, v in enumerate(lam):
        if i + 1 == len(lam) or lam[i + 1] < v:
            out.append(normalize(lam[:i] + (v - 1,) + lam[i + 1:]))
    return sorted(out, reverse=True)


def branch_up(lam: Partition) -> list[Partition]:
    """Add one box, in every possible way (including a new row)."""
    out = []
    ext = lam + (0,)
    for i, v in enumerate(ext):
        if i == 0 or ext[i - 1] > v:
            out.append(normalize(ext[:i] + (v + 1,) + ext[i + 1:]))
    return sorted(out, reverse=True)


@cache
def path_count(mu: Partition, lam: Partition) -> int:
    """Number of saturated chains from mu up to lam in Young's lattice."""
    if not contains(lam, mu):
        return 0
    if lam == mu:
        return 1
    return sum(path_count(mu, nu) for nu in branch_down(lam))


def dimension(lam: Partition) -> int:
    return path_count((), lam)


def lattice_edges(max_n: int) -> list[tuple[Partition, Partition]]:
    return [(lam, nu) for n in range(max_n) for lam in partitions_of(n) for nu in branch_up(lam)]


# characters --------------------------------------------------------------

def _beta(lam: Partition, length: int) -> tuple[int, ...]:
    lam = lam + (0,) * (length - len(lam))
    return tuple(lam[i] + length - 1 - i for i in range(length))


def _from_beta(beta) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    return normalize(tuple(b[i] - (m - 1 - i) for i in range(m)))


def _rim_hooks(lam: Partition, r: int):
    """Yield (partition after removing an r-rim hook, leg length)."""
    m = len(lam) + r
    beta = _beta(lam, m)
    present = set(beta)
    for b in beta:
        if b - r >= 0 and (b - r) not in present:
            height = sum(1 for c in beta if b - r < c < b)
            yield _from_beta([c if c != b else b - r for c in beta]), height


@cache
def _mn(outer: Partition, inner: Partition, cls: tuple[int, ...]) -> int:
    if not cls:
        return 1 if outer == inner else 0
    r, rest = cls[0], cls[1:]
    total = 0
    for nu, h in _rim_hooks(outer, r):
        if contains(nu, inner):
            total += (-1) ** h * _mn(nu, inner, rest)
    return total


def mn_character(shape, cls) -> int:
    """Character value of a straight or skew shape at a cycle type."""
    if isinstance(shape, SkewShape):
        outer, inner = shape.outer, shape.inner
    else:
        outer, inner = normalize(shape), ()
    cls = normalize(sorted(cls, reverse=True))
    if sum(outer) - sum(inner) != sum(cls):
        raise ValueError("size mismatch between shape and class")
    return _mn(outer, inner, cls)


def z_value(cls: Partition) -> int:
    """Centralizer order of a permutation with cycle type ``cls``."""
    out = 1
    for part, mult in Counter(cls).items():
        out *= part ** mult * factorial(mult)
    return out


@dataclass(frozen=True)
class CharacterVector:
    degree: int
    values: tuple[tuple[Partition, int], ...]

    @classmethod
    def from_function(cls, k: int, fn) -> CharacterVector:
        return cls(k, tuple((rho, fn(rho)) for rho in partitions_of(k)))

    def __getitem__(self, rho) -> int:
        return dict(self.values)[normalize(rho)]

    @property
    def dimension(self) -> int:
        return self[(1,) * self.degree] if self.degree else self[()]

    def as_list(self) -> list[int]:
        return [v for _, v in self.values]


def irreducible_character(lam: Partition) -> CharacterVector:
    return CharacterVector.from_function(sum(lam), lambda rho: mn_character(lam, rho))


def skew_character(outer: Partition, inner: Partition) -> CharacterVector:
    sh = SkewShape(outer, inner)
    return CharacterVector.from_function(sh.size, lambda rho: mn_character(sh, rho))


def inner_product(chi: CharacterVector, psi: CharacterVector) -> Fraction:
    if chi.degree != psi.degree:
        raise ValueError("characters of different degrees")
    a, b = dict(chi.values), dict(psi.values)
    return sum((Fraction(a[r] * b[r], z_value(r)) for r in partitions_of(chi.degree)), Fraction(0))


def decompose_character(chi: CharacterVector) -> dict[Partition, int]:
    """Multiplicities of the irreducibles in a genuine character."""
    out = {}
    for lam in partitions_of(chi.degree):
        m = inner_product(chi, irreducible_character(lam))
        if m.denominator != 1 or m < 0:
            raise ValueError("not a genuine character")
        if m:
            out[lam] = int(m)
    return out


def pieri_strips(mu: Partition, k: int, direction: str = "horizontal") -> list[Partition]:
    """Shapes obtained from mu by adding a horizontal or vertical k-strip."""
    if direction not in ("horizontal", "vertical"):
        raise ValueError("direction must be horizontal or vertical")
    out = []
    for lam in partitions_of(sum(mu) + k):
        if not contains(lam, mu):
            continue
        inner = mu + (0,) * (len(lam) - len(mu))
        if direction == "horizontal":
            ok = all(lam[i + 1] <= inner[i] for i in range(len(lam) - 1))
        else:
            ok = all(lam[i] - inner[i] <= 1 for i in range(len(lam)))
        if ok:
            out.append(lam)
    return out


def tensor_with_permutation_rep(lam: Partition) -> dict[Partition, int]:
    """Decompose the irreducible of shape lam tensored with the defining permutation rep."""
    lam = normalize(lam)
    n = sum(lam)
    if n < 1:
        raise ValueError("need a nonempty partition")
    chi = CharacterVector.from_function(n, lambda rho: mn_character(lam, rho) * rho.count(1))
    dec = decompose_character(chi)
    return {mu: dec.get(mu, 0) for mu in partitions_of(n)}


# Specht modules ----------------------------------------------------------

SPECHT_MAX = 6


@dataclass(frozen=True)
class SpechtGenerators:
    shape: Partition
    tableaux: tuple[tuple[tuple[int, ...], ...], ...]
    matrices: tuple[sympy.ImmutableMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.tableaux)

    def matrix_of(self, perm) -> sympy.Matrix:
        """Representing matrix of an arbitrary permutation (bubble-sort factorization)."""
        d = self.dimension
        out = sympy.eye(d)
        word = []
        p = list(perm)
        for i in range(len(p)):
            for j in range(len(p) - 1 - i):
                if p[j] > p[j + 1]:
                    p[j], p[j + 1] = p[j + 1], p[j]
                    word.append(j)
        # p = s_{w_k} ... s_{w_1}
        for j in reversed(word):
            out = out * self.matrices[j]
        return out


def standard_tableaux(lam: Partition) -> list[tuple[tuple[int, ...], ...]]:
    """Standard tableaux with entries 0..n-1, rows listed top to bottom."""
    n = sum(lam)
    out = []

    def rec(rows, k):
        if k == n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(rows, k + 1)
                rows[i].pop()

    rec([[] for _ in lam], 0)
    return out


def _polytabloid(T) -> dict[tuple[frozenset, ...], int]:
    cols = [[row[c] for row in T if len(row) > c] for c in range(len(T[0]) if T else 0)]
    vec: dict = {}
    for combo in _column_perms(cols):
        rows = [[] for _ in T]
        sgn = 1
        for col, (perm, s) in zip(cols, combo):
            sgn *= s
            for r, idx in enumerate(perm):
                rows[r].append(col[idx])
        key = tuple(frozenset(r) for r in rows)
        vec[key] = vec.get(key, 0) + sgn
    return vec


def _column_perms(cols):
    opts = [[(p, sign(p)) for p in permutations(range(len(c)))] for c in cols]
    if not opts:
        yield ()
        return

    def rec(i):
        if i == len(opts):
            yield ()
            return
        for o in opts[i]:
            for rest in rec(i + 1):
                yield (o,) + rest

    yield from rec(0)


@cache
def specht_generators(lam: Partition, max_size: int = SPECHT_MAX) -> SpechtGenerators:
    """Young's natural representation on standard polytabloids."""
    lam = normalize(lam)
    n = sum(lam)
    if n > max_size:
        raise ValueError(f"shape of size {n} exceeds the configured bound {max_size}")
    tabs = standard_tableaux(lam)
    basis = [_polytabloid(T) for T in tabs]
    keys = sorted({k for v in basis for k in v}, key=lambda k: tuple(sorted(map(sorted, k))))
    index = {k: i for i, k in enumerate(keys)}
    B = sympy.zeros(len(keys), len(tabs))
    for j, v in enumerate(basis):
        for k, c in v.items():
            B[index[k], j] = c
    mats = []
    for s in range(n - 1):
        cols = []
        for T in tabs:
            sT = tuple(tuple(s + 1 if e == s else s if e == s + 1 else e for e in row) for row in T)
            v = _polytabloid(sT)
            rhs = sympy.zeros(len(keys), 1)
            for k, c in v.items():
                rhs[index[k], 0] = c
            sol, params = B.gauss_jordan_solve(rhs)
            cols.append(sol)
        M = sympy.Matrix.hstack(*cols) if cols else sympy.zeros(0, 0)
        if any(not e.is_integer for e in M):
            raise ArithmeticError("non-integral Specht matrix")
        mats.append(sympy.ImmutableMatrix(M))
    return SpechtGenerators(lam, tuple(tabs), tuple(mats))
