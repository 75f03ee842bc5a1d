"""Shape classification of non-closed groups and the point-tuple closure."""

import pytest

from helpers import cyclic_4, grp
from permclosure.classify import (
    FormKind,
    check_wielandt_containment,
    classify_main,
    degree7_panel,
    degree7_panel_expectations,
    verify_main,
    wielandt_closure,
)
from permclosure.closure import galois_closure
from permclosure.perm import (
    alternating_on,
    direct_product,
    generate_group,
    index2_subdirect,
    symmetric_on,
)


# ---------------------------------------------------------------------------
# the applicability threshold


def test_threshold_blocks_small_degrees():
    form = classify_main(symmetric_on(range(1, 7), 6), 6, 4)
    assert form.kind is FormKind.OUT_OF_THEOREM_RANGE
    assert form.codegree == 2 and form.threshold == 6


def test_alphabet_at_least_degree_predicts_closed():
    form = classify_main(cyclic_4(), 4, 4)
    assert form.kind is FormKind.PREDICTED_CLOSED
    assert form.codegree == 0


def test_degree_below_group_degree_is_rejected():
    with pytest.raises(ValueError):
        classify_main(symmetric_on(range(1, 7), 6), 5, 3)


# ---------------------------------------------------------------------------
# shapes at degree 7, alphabet 5


def test_panel_shapes_match_expectations():
    expected = degree7_panel_expectations()
    for name, group in degree7_panel():
        form = classify_main(group, 7, 5)
        assert form.kind is expected[name], name


def test_alternating_product_shape_details():
    a7 = alternating_on(range(1, 8), 7)
    form = classify_main(a7, 7, 5)
    assert form.kind is FormKind.ALTERNATING_TIMES_L
    assert form.block == tuple(range(1, 8)) and form.complement == ()
    assert form.predicted_closure == symmetric_on(range(1, 8), 7)

    a6 = alternating_on(range(1, 7), 7)
    form = classify_main(a6, 7, 5)
    assert form.kind is FormKind.ALTERNATING_TIMES_L
    assert form.block == tuple(range(1, 7)) and form.complement == (7,)
    assert form.predicted_closure == symmetric_on(range(1, 7), 7)


def test_forced_classification_sees_the_gluing():
    """Below the threshold the gluing shape is still recognizable with
    force, and its closure prediction matches the computation."""
    s5 = symmetric_on(range(1, 6), 7)
    tail = symmetric_on((6, 7), 7)
    half = generate_group([], ground_set=(6, 7), degree=7)
    glued = index2_subdirect(s5, tail, half)
    form = classify_main(glued, 7, 4, force=True)
    assert form.kind is FormKind.PROPER_SUBDIRECT
    assert form.complement_half is not None and form.complement_half.order == 1
    assert form.predicted_closure.order == 240
    assert galois_closure(glued, 4) == form.predicted_closure


def test_verify_main_agrees_on_the_panel():
    for name, group in degree7_panel():
        rep = verify_main(group, 7, 5)
        assert rep.applicable and rep.agree, name
        assert rep.predicted_nonclosed == rep.computed_nonclosed, name


def test_verify_main_outside_the_range_checks_nothing():
    rep = verify_main(cyclic_4(), 4, 2)
    assert not rep.applicable and rep.agree
    assert rep.computed_nonclosed


# ---------------------------------------------------------------------------
# the closure on tuples of points


def test_point_pair_closure_of_the_four_cycle_is_itself():
    assert wielandt_closure(cyclic_4(), 2) == cyclic_4()


def test_point_tuple_closure_at_one_is_the_orbit_stabilizer():
    # orbits of single points determine nothing beyond the point orbits
    assert wielandt_closure(cyclic_4(), 1) == symmetric_on(range(1, 5), 4)
    g = grp(5, "(1 2)", "(4 5)")
    clo = wielandt_closure(g, 1)
    assert clo == direct_product(symmetric_on((1, 2), 5), symmetric_on((4, 5), 5))


def test_point_tuple_closure_grows_the_dihedral_group():
    d4 = grp(4, "(1 2 3 4)", "(1 3)")
    assert wielandt_closure(d4, 2) == d4
    assert wielandt_closure(d4, 1).order == 24


def test_containment_between_the_two_closures():
    for g in (cyclic_4(), grp(4, "(1 2 3)"), alternating_on(range(1, 6), 5)):
        for k in (1, 2, 3):
            assert check_wielandt_containment(g, k)


def test_coordinate_closure_of_the_four_cycle_at_three_letters():
    assert galois_closure(cyclic_4(), 3) == cyclic_4()
