from math import factorial

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from gpdspan.groups import symmetric_group, cycle_type
from gpdspan.young import (
    SkewShape,
    branch_down,
    branch_up,
    decompose_character,
    dimension,
    inner_product,
    irreducible_character,
    lattice_edges,
    mn_character,
    normalize,
    partitions_of,
    path_count,
    pieri_strips,
    skew_character,
    specht_generators,
    standard_tableaux,
    tensor_with_permutation_rep,
    z_value,
)


def test_partition_counts_and_order():
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_normalize_rejects_non_partitions():
    assert normalize((2, 1, 0)) == (2, 1)
    with pytest.raises(ValueError):
        normalize((1, 2))


def test_branching():
    assert branch_up((2, 1)) == [(3, 1), (2, 2), (2, 1, 1)]
    assert branch_down((3, 1)) == [(3,), (2, 1)]
    assert branch_down(()) == []


def test_path_counts():
    assert path_count((2,), (3, 1)) == 2
    assert path_count((2, 1), (3, 2, 1)) == 6
    assert path_count((2,), (1, 1, 1)) == 0
    assert dimension((3, 2, 1)) == 16


@pytest.mark.parametrize("n", range(0, 8))
def test_sum_of_squared_dimensions(n):
    assert sum(dimension(l) ** 2 for l in partitions_of(n)) == factorial(n)


def test_lattice_edges_count():
    assert len(lattice_edges(4)) == 1 + 2 + 4 + 7


@pytest.mark.parametrize("n", range(1, 7))
def test_character_orthogonality(n):
    P = partitions_of(n)
    for a in P:
        for b in P:
            assert inner_product(irreducible_character(a), irreducible_character(b)) == (a == b)


@pytest.mark.parametrize("n", range(1, 6))
def test_z_values_count_group(n):
    assert sum(factorial(n) // z_value(r) for r in partitions_of(n)) == factorial(n)


def test_known_character_values():
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((3, 1), (2, 2)) == -1
    assert mn_character((2, 2), (3, 1)) == -1
    assert mn_character((1, 1, 1, 1), (2, 1, 1)) == -1


def test_skew_characters():
    assert skew_character((3, 1), (2,)).as_list() == [0, 2]
    assert skew_character((3, 2, 1), (2, 1)).as_list() == [0, 0, 6]
    assert decompose_character(skew_character((3, 2, 1), (2, 1))) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))


def test_regular_decomposition():
    reg = irreducible_character((1,)).__class__.from_function(3, lambda r: 6 if r == (1, 1, 1) else 0)
    assert decompose_character(reg) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


def test_pieri():
    assert pieri_strips((2,), 2, "horizontal") == [(4,), (3, 1), (2, 2)]
    assert pieri_strips((2,), 2, "vertical") == [(3, 1), (2, 1, 1)]


@given(st.sampled_from([l for n in range(1, 6) for l in partitions_of(n)]),
       st.sampled_from(["horizontal", "vertical"]))
def test_pieri_matches_characters(mu, direction):
    """Strip shapes are exactly where the skew character contains trivial (or sign)."""
    k = 2
    target = (k,) if direction == "horizontal" else (1,) * k
    for lam in partitions_of(sum(mu) + k):
        if path_count(mu, lam):
            has = decompose_character(skew_character(lam, mu)).get(target, 0)
            assert has == (lam in pieri_strips(mu, k, direction))


def test_tensor_with_permutation_rep():
    assert tensor_with_permutation_rep((2,)) == {(2,): 1, (1, 1): 1}
    assert tensor_with_permutation_rep((2, 1)) == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


def test_standard_tableaux_count():
    for lam in partitions_of(5):
        assert len(standard_tableaux(lam)) == dimension(lam)


@pytest.mark.parametrize("lam", [l for n in range(1, 6) for l in partitions_of(n)])
def test_specht_traces_are_characters(lam):
    sg = specht_generators(lam)
    for g in symmetric_group(sum(lam)).elements:
        assert sg.matrix_of(g).trace() == mn_character(lam, cycle_type(g) or (1,) * sum(lam))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([l for n in range(2, 6) for l in partitions_of(n)]), st.data())
def test_specht_is_a_representation(lam, data):
    n = sum(lam)
    sg = specht_generators(lam)
    p = tuple(data.draw(st.permutations(list(range(n)))))
    q = tuple(data.draw(st.permutations(list(range(n)))))
    pq = tuple(p[q[i]] for i in range(n))
    assert sg.matrix_of(pq) == sg.matrix_of(p) * sg.matrix_of(q)


def test_specht_size_bound():
    with pytest.raises(ValueError, match="exceeds"):
        specht_generators((4, 3))


def test_specht_matrices_are_integral_involutions():
    sg = specht_generators((3, 2))
    for M in sg.matrices:
        assert M * M == sympy.eye(sg.dimension)
