import re

import pytest

from gpdspan.diagrams import (
    TermError,
    TwoCellTerm,
    catalog,
    eval_one_cell,
    eval_two_cell,
    mirror,
    run_check,
    run_relation_catalog,
    trace_histories,
)
from gpdspan.groupoid import fs_truncated
from gpdspan.spans import identity_span
from gpdspan.twocells import converse_two_cell, equivalent_two_cells


def test_empty_word_is_identity():
    assert eval_one_cell("", 4) is identity_span(fs_truncated(4), 4)


def test_one_cell_window_error():
    with pytest.raises(ValueError, match="required degree 3"):
        eval_one_cell("udu", 2)
    with pytest.raises(TermError):
        eval_one_cell("uxd", 4)


def test_ill_formed_stacking_names_layer():
    t = TwoCellTerm("du", ((0, "cap:du"), (0, "cap:du")))
    with pytest.raises(TermError, match="layer 1"):
        t.words()
    with pytest.raises(TermError, match="layer 0"):
        TwoCellTerm("u", ((0, "nope"),)).words()


def test_words_and_degree():
    t = TwoCellTerm("u", ((1, "cup:du"), (0, "cap:ud")))
    assert t.words() == ["u", "udu", "u"]
    assert t.degree == 3


TERMS = [
    TwoCellTerm("ud", ((0, "cross:ud"),)),
    TwoCellTerm("", ((0, "cup:ud"),)),
    TwoCellTerm("d", ((1, "cup:du"), (0, "cross:dd"))),
    TwoCellTerm("uu", ((0, "cross:uu"), (1, "cup:du"))),
]


@pytest.mark.parametrize("term", TERMS)
def test_mirror_is_converse(term):
    a = eval_two_cell(mirror(term), 5)
    b = converse_two_cell(eval_two_cell(term, 5))
    assert equivalent_two_cells(a, b) is not None


@pytest.mark.parametrize("term", TERMS)
def test_evaluated_terms_are_valid(term):
    assert eval_two_cell(term, 5).is_valid()


def test_catalog_passes_at_four_and_five():
    for N in (4, 5):
        results = run_relation_catalog(N)
        assert [r.name for r in results if not r.ok] == []


@pytest.mark.parametrize("chk", catalog(), ids=lambda c: c.name)
def test_stable_under_window_growth(chk):
    assert run_check(chk, 5).ok
    assert run_check(chk, 6).ok


def test_catalog_covers_axioms():
    names = {c.name for c in catalog()}
    for need in ("biproduct-sum", "left-twist-zero", "braid-uuu", "braid-ddd", "double-crossing-uu",
                 "double-crossing-dd", "mixed-crossing-retract", "loop-removal", "commutation"):
        assert need in names
    assert sum(n.startswith("snake") for n in names) == 4


def test_trace_cap_on_du():
    lines = trace_histories(TwoCellTerm("du", ((0, "cap:du"),)), 2, 4)
    same = [ln for ln in lines if "add n1, then remove n1" in ln]
    other = [ln for ln in lines if "add n1, then remove x" in ln]
    assert same and "related to [do nothing]" in same[0]
    assert other and "related to nothing" in other[0]


def test_trace_mixed_crossing_dagger():
    lines = trace_histories(TwoCellTerm("du", ((0, "cross:du"),)), 2, 4)
    assert any("add n1, then remove n1" in ln and "related to nothing" in ln for ln in lines)
    mixed = [ln for ln in lines if re.search(r"\[add n1, then remove (x\d)\] is related to \[remove \1, then add n1\]", ln)]
    assert len(mixed) == 1


def test_trace_eta_on_empty_set():
    lines = trace_histories(TwoCellTerm("", ((0, "cup:ud"),)), 0, 4)
    assert lines[1].endswith("is related to nothing")
