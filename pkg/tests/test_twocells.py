import pytest

from gpdspan.spans import word_span
from gpdspan.twocells import (
    check_equivalence_witness,
    converse_two_cell,
    equivalent_two_cells,
    generator_two_cell,
    horizontal_compose,
    identity_two_cell,
    is_zero,
    restrict_two_cell,
    two_cell_sum,
    vertical_compose,
    whisker,
    zero_two_cell,
)

NAMES = ["i_id", "i_id_dagger", "i_AdagA", "i_AdagA_dagger", "eta_R", "eps_L"]


@pytest.mark.parametrize("name", NAMES)
def test_generators_are_valid(name):
    assert generator_two_cell(name, 5).is_valid()


@pytest.mark.parametrize("perm,direction", [((1, 0), "u"), ((1, 0), "d"), ((1, 2, 0), "u"), ((2, 0, 1), "d")])
def test_symmetric_action_valid(perm, direction):
    assert generator_two_cell("sym", 5, perm=perm, direction=direction).is_valid()


def test_generator_window_error():
    with pytest.raises(ValueError, match="window too small"):
        generator_two_cell("i_id", 1)


def test_identity_is_a_unit_for_vertical_composition():
    a = generator_two_cell("i_AdagA", 5)
    left = vertical_compose(identity_two_cell(a.tgt), a)
    right = vertical_compose(a, identity_two_cell(a.src))
    for c in (left, right):
        w = equivalent_two_cells(c, a)
        assert w is not None and check_equivalence_witness(c, a, w)


def test_vertical_composition_is_valid():
    a = generator_two_cell("i_id", 5)
    b = generator_two_cell("i_id_dagger", 5)
    assert vertical_compose(b, a).is_valid()
    assert vertical_compose(a, b).is_valid()


def test_converse_is_involutive_up_to_equivalence():
    a = generator_two_cell("eta_R", 5)
    cc = converse_two_cell(converse_two_cell(a))
    assert equivalent_two_cells(cc, a) is not None


def test_whiskering_is_valid():
    a = generator_two_cell("i_AdagA", 5)
    u = word_span("u", 5).letters
    d = word_span("d", 5).letters
    assert whisker(a, outer=u).is_valid()
    assert whisker(a, inner=d).is_valid()


def test_horizontal_composition_matches_whiskering():
    a = generator_two_cell("sym", 5, perm=(1, 0), direction="u")
    b = generator_two_cell("i_id", 5)
    h = horizontal_compose(b, a)
    assert h.is_valid()
    assert h.src is word_span("uu", 5) and h.tgt is word_span("duuu", 5)


def test_zero_and_sums():
    X, Y = word_span("du", 5), word_span("ud", 5)
    z = zero_two_cell(X, Y)
    assert is_zero(z)
    a = generator_two_cell("i_AdagA_dagger", 5)
    s = two_cell_sum(a, z)
    assert equivalent_two_cells(s, a) is not None


def test_different_generators_are_not_equivalent():
    a = generator_two_cell("sym", 5, perm=(1, 0), direction="d")
    b = identity_two_cell(a.src)
    assert equivalent_two_cells(a, b) is None


def test_restriction_keeps_window():
    a = generator_two_cell("i_id", 6)
    r = restrict_two_cell(a, 2)
    assert len(r.apex) == 3
    assert r.is_valid()
