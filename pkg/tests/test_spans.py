from fractions import Fraction
from itertools import product
from math import factorial

import pytest

from gpdspan.groupoid import fs_truncated
from gpdspan.spans import (
    annihilation_span,
    check_span_witness,
    classes_over,
    compose_spans,
    creation_span,
    dagger,
    direct_sum,
    identity_span,
    spans_isomorphic,
    tameness_report,
    window_components,
    word_span,
    zero_span,
)

from oracles import apex_classes, raw_triple_classes

N = 4


def letter(w, n=N):
    return creation_span(n) if w == "u" else annihilation_span(n)


@pytest.mark.parametrize("word", ["".join(p) for k in (1, 2) for p in product("ud", repeat=k)])
def test_chain_matches_raw_triples(word):
    """Chain pullbacks agree with brute-force orbit enumeration."""
    first, rest = word[-1], word[:-1]
    S = letter(first)
    T = letter(rest) if rest else identity_span(fs_truncated(N), N)
    expected = raw_triple_classes(T, S)
    assert apex_classes(word_span(word, N)) == expected


def test_identity_word_matches_raw_triples():
    I = identity_span(fs_truncated(N), N)
    assert apex_classes(word_span("", N)) == raw_triple_classes(I, I)


@pytest.mark.parametrize("word", ["udd", "dud", "uud", "ddu"])
def test_three_letter_chain_matches_raw_triples(word):
    S = word_span(word[1:], N)
    T = letter(word[0])
    assert apex_classes(word_span(word, N)) == raw_triple_classes(T, S)


def test_du_table():
    S = word_span("du", 6)
    for n in range(1, 6):
        cs = classes_over(S, (n,), (n,))
        assert sorted(len(S.apex.group(c)) for c in cs) == [factorial(n - 1), factorial(n)]


def test_ud_has_both_legs_plus_one():
    S = word_span("ud", 5)
    for c in range(len(S.apex)):
        a = S.source.size(S.right.comp_map[c])
        b = S.target.size(S.left.comp_map[c])
        assert a == b and a >= 1


def test_composition_is_strictly_associative_and_unital():
    u, d = creation_span(5), annihilation_span(5)
    I = identity_span(fs_truncated(5), 5)
    assert compose_spans(u, compose_spans(d, u)) is compose_spans(compose_spans(u, d), u)
    assert compose_spans(I, u).letters == (u,)
    assert compose_spans(u, I).letters == (u,)


def test_dagger_is_involutive():
    S = word_span("duu", 5)
    assert dagger(dagger(S)) is S
    assert dagger(S) is word_span("ddu", 5)
    assert dagger(creation_span(5)) is annihilation_span(5)


def test_commutation_witness():
    N6 = 6
    lhs = word_span("du", N6)
    rhs = direct_sum(word_span("ud", N6), identity_span(fs_truncated(N6), N6))
    w = spans_isomorphic(lhs, rhs)
    assert w is not None and check_span_witness(lhs, rhs, w)
    assert spans_isomorphic(creation_span(N6), annihilation_span(N6)) is None


def test_window_rule_keeps_histories_near_small_sets():
    S = word_span("uu", 5)
    keep = window_components(S, S.safe_bound)
    sizes = [S.source.size(S.right.comp_map[c]) for c in keep]
    assert max(sizes) == 3


def test_tameness_report():
    S = word_span("du", 5)
    rep = tameness_report(S)
    card = {(e.target, e.source): e.cardinality for e in rep}
    # two classes over (n, n): n + 1 choices of which point, normalized
    assert card[((2,), (2,))] == Fraction(1, 2) + Fraction(1, 1)
    assert all(e.classes == 2 for e in rep if e.source != (0,))


def test_zero_span_has_empty_apex():
    G = fs_truncated(3)
    Z = zero_span(G, G, 3)
    assert len(Z.apex) == 0
    assert spans_isomorphic(Z, zero_span(G, G, 3)) is not None


def test_boundary_mismatch():
    with pytest.raises(ValueError):
        compose_spans(creation_span(3), creation_span(4))
