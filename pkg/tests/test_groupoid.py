from fractions import Fraction
from math import factorial

import pytest

from gpdspan.groupoid import (
    Functor,
    NaturalIso,
    compose_functors,
    disjoint_union,
    empty_groupoid,
    fs_truncated,
    groupoid_cardinality,
    groupoids_equivalent,
    hom_set,
    identity_functor,
    identity_iso,
    inclusion,
    plus_one,
    point,
)
from gpdspan.groups import transposition


def test_fs_truncated_is_cached_and_ordered():
    G = fs_truncated(4)
    assert G is fs_truncated(4, 1)
    assert [c.profile for c in G.components] == [(0,), (1,), (2,), (3,), (4,)]
    assert [len(c.group) for c in G.components] == [1, 1, 2, 6, 24]


def test_colored_profiles():
    G = fs_truncated(2, 2)
    assert [c.profile for c in G.components] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert len(G.group(G.index((1, 1)))) == 1


@pytest.mark.parametrize("N", [3, 5, 7])
def test_cardinality_is_partial_exponential(N):
    assert groupoid_cardinality(fs_truncated(N)) == sum(Fraction(1, factorial(n)) for n in range(N + 1))


def test_colored_cardinality_matches_e_to_the_nz():
    # coefficient of z^m in e^{2z} is 2^m / m!
    G = fs_truncated(4, 2)
    assert groupoid_cardinality(G) == sum(Fraction(2 ** m, factorial(m)) for m in range(5))


def test_hom_sets():
    G = fs_truncated(3)
    assert len(hom_set(G, (3,), (3,))) == 6
    assert hom_set(G, (2,), (3,)) == []
    with pytest.raises(KeyError):
        G.index((9,))


def test_plus_one_is_a_functor():
    F = plus_one(fs_truncated(3), fs_truncated(4))
    assert F.is_functor()
    assert F(2, (1, 0)) == (1, 0, 2)


def test_plus_one_colored_places_point_in_block():
    F = plus_one(fs_truncated(2, 2), fs_truncated(3, 2), color=0)
    assert F.is_functor()
    i = F.source.index((1, 1))
    assert F.target[F.comp_map[i]].profile == (2, 1)
    assert F(i, (0, 1)) == (0, 1, 2)


def test_inclusion_and_composition():
    A, B, C = fs_truncated(2), fs_truncated(3), fs_truncated(4)
    f = compose_functors(inclusion(B, C), inclusion(A, B))
    assert f.is_functor()
    assert f.comp_map == inclusion(A, C).comp_map


def test_natural_iso():
    G = fs_truncated(3)
    F = identity_functor(G)
    assert identity_iso(F).is_natural()
    comps = [G.group(i).identity for i in range(len(G))]
    comps[2] = transposition(2, 0, 1)
    # conjugating by an element of an abelian group is still natural
    assert NaturalIso(F, F, comps).is_natural()
    comps[3] = transposition(3, 0, 1)
    assert not NaturalIso(F, F, comps).is_natural()


def test_groupoid_equivalence():
    G = fs_truncated(3)
    H = disjoint_union(point(), fs_truncated(3).__class__(G.components[1:]))
    assert groupoids_equivalent(G, H) is not None
    assert groupoids_equivalent(G, H, match_profiles=True) is None
    assert groupoids_equivalent(G, fs_truncated(2)) is None
    assert groupoids_equivalent(empty_groupoid(), empty_groupoid()) is not None


def test_functor_rejects_bad_component_map():
    with pytest.raises(ValueError):
        Functor(fs_truncated(2), fs_truncated(2), [0], lambda i, h: h)
