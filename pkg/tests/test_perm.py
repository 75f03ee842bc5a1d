"""Permutation arithmetic, cycle notation, and group construction."""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from helpers import cyclic_4, grp, klein_four
from permclosure.budgets import Budgets
from permclosure.errors import BudgetExceeded, DegreeMismatch, ParseError
from permclosure.perm import (
    PermGroup,
    Permutation,
    alternating_on,
    are_conjugate_in_symmetric,
    compose,
    conjugate,
    direct_product,
    extend_degree,
    format_perm,
    generate_group,
    identity,
    index2_subdirect,
    is_primitive,
    is_transitive,
    orbits_on_points,
    parse_group_text,
    parse_perm,
    read_group_file,
    restrict_to,
    shift_group,
    shift_perm,
    symmetric_on,
    viewed_at_degree,
)


def perms_of(n):
    return st.permutations(range(1, n + 1)).map(Permutation)


# ---------------------------------------------------------------------------
# single permutations


def test_images_are_one_based():
    p = Permutation([2, 3, 1])
    assert p(1) == 2 and p(2) == 3 and p(3) == 1
    assert p.images == (2, 3, 1)
    assert p.degree == 3


def test_constructor_rejects_non_bijections():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])
    with pytest.raises(ValueError):
        Permutation([0, 1, 2])
    with pytest.raises(ValueError):
        Permutation([1, 2, 4])


def test_call_outside_domain():
    p = identity(3)
    with pytest.raises(ValueError):
        p(0)
    with pytest.raises(ValueError):
        p(4)


def test_s3_multiplication_table():
    """Every product in S_3 against a hand-rolled composition."""
    elements = [Permutation(list(t)) for t in itertools.permutations((1, 2, 3))]
    for p in elements:
        for q in elements:
            expected = tuple(p(q(i)) for i in (1, 2, 3))
            assert (p * q).images == expected


@given(perms_of(5), perms_of(5))
def test_compose_applies_right_factor_first(p, q):
    r = compose(p, q)
    for i in range(1, 6):
        assert r(i) == p(q(i))


@given(perms_of(4), perms_of(4), perms_of(4))
def test_compose_is_associative(p, q, r):
    assert (p * q) * r == p * (q * r)


@given(perms_of(6))
def test_inverse_cancels(p):
    assert p * p.inverse() == identity(6)
    assert p.inverse() * p == identity(6)


@given(perms_of(5), perms_of(5))
def test_sign_is_multiplicative(p, q):
    assert (p * q).sign == p.sign * q.sign


@given(perms_of(6), perms_of(6))
def test_conjugation_preserves_cycle_type(p, s):
    assert conjugate(p, s).cycle_type() == p.cycle_type()
    assert conjugate(p, s) == s * p * s.inverse()


def test_order_and_cycle_type():
    p = parse_perm("(1 2 3)(4 5)", 6)
    assert p.order == 6
    assert p.cycle_type() == (3, 2, 1)
    assert p.moved_points() == (1, 2, 3, 4, 5)
    assert identity(4).order == 1


def test_compose_requires_equal_degrees():
    with pytest.raises(DegreeMismatch):
        compose(identity(3), identity(4))


# ---------------------------------------------------------------------------
# cycle notation


@given(perms_of(7))
def test_format_parse_round_trip(p):
    assert parse_perm(format_perm(p), 7) == p


def test_identity_spellings():
    for text in ("id", "()", "", "  "):
        assert parse_perm(text, 5) == identity(5)
    assert format_perm(identity(5)) == "id"


def test_cycles_start_at_least_point():
    assert format_perm(parse_perm("(3 1 2)", 3)) == "(1 2 3)"
    assert format_perm(parse_perm("(5 4)(2 1)", 5)) == "(1 2)(4 5)"


def test_commas_and_spacing_accepted():
    assert parse_perm("(1,2,3)(4, 5)", 5) == parse_perm("(1 2 3)(4 5)", 5)


def test_parse_error_positions():
    with pytest.raises(ParseError) as err:
        parse_perm("(1 2", 4)
    assert err.value.position == 0 and "unclosed" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_perm("(1 2) x", 4)
    assert err.value.position == 6

    with pytest.raises(ParseError) as err:
        parse_perm("(1 5)", 4)
    assert err.value.position == 3 and "outside" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_perm("(1 2)(2 3)", 4)
    assert "appears twice" in str(err.value)

    with pytest.raises(ParseError) as err:
        parse_perm("(3)", 4)
    assert "length 1" in str(err.value)


# ---------------------------------------------------------------------------
# reshaping


def test_extend_and_shift():
    p = parse_perm("(1 2)", 2)
    assert extend_degree(p, 5).images == (2, 1, 3, 4, 5)
    assert shift_perm(p, 2, 5).images == (1, 2, 4, 3, 5)
    with pytest.raises(ValueError):
        extend_degree(p, 1)
    with pytest.raises(ValueError):
        shift_perm(p, 4, 5)


def test_restrict_to_invariant_set():
    p = parse_perm("(1 2)(3 4 5)", 5)
    assert restrict_to(p, {3, 4, 5}) == parse_perm("(3 4 5)", 5)
    with pytest.raises(ValueError):
        restrict_to(p, {1, 3})


# ---------------------------------------------------------------------------
# group construction


def test_generate_group_orders():
    assert cyclic_4().order == 4
    assert grp(4, "(1 2 3 4)", "(1 3)").order == 8
    assert grp(4, "(1 2)", "(1 2 3 4)").order == 24
    assert klein_four().order == 4


def test_empty_generators_need_a_degree():
    triv = generate_group([], degree=3)
    assert triv.order == 1 and triv.degree == 3 and triv.ground_set == ()
    with pytest.raises(ValueError):
        generate_group([])


def test_ground_set_defaults_to_moved_points():
    g = grp(5, "(2 3)")
    assert g.ground_set == (2, 3)
    h = generate_group([parse_perm("(2 3)", 5)], ground_set=(1, 2, 3), degree=5)
    assert h.ground_set == (1, 2, 3)
    with pytest.raises(ValueError):
        generate_group([parse_perm("(2 3)", 5)], ground_set=(1, 2), degree=5)


def test_membership_and_subgroup_order():
    d4 = grp(4, "(1 2 3 4)", "(1 3)")
    assert parse_perm("(1 3)(2 4)", 4) in d4
    assert parse_perm("(1 2)", 4) not in d4
    assert cyclic_4() <= d4
    assert not d4 <= cyclic_4()
    with pytest.raises(DegreeMismatch):
        grp(3, "(1 2)") <= d4


def test_group_equality_is_by_element_set():
    a = cyclic_4()
    b = generate_group([parse_perm("(1 4 3 2)", 4)], degree=4)
    assert a == b and hash(a) == hash(b)
    assert a != klein_four()


def test_from_elements_validates_closure():
    with pytest.raises(ValueError):
        PermGroup.from_elements([identity(3), parse_perm("(1 2 3)", 3)])
    with pytest.raises(DegreeMismatch):
        PermGroup.from_elements([identity(3), identity(4)])
    v = PermGroup.from_elements(klein_four().elements)
    assert v == klein_four()


def test_materialization_budget_is_enforced():
    small = Budgets(materialization_bound=10)
    with pytest.raises(BudgetExceeded) as err:
        generate_group([parse_perm("(1 2)", 4), parse_perm("(1 2 3 4)", 4)], budgets=small)
    assert err.value.budget_name == "materialization"


def test_symmetric_and_alternating_on_points():
    s = symmetric_on((2, 4, 5), 6)
    assert s.order == 6 and s.ground_set == (2, 4, 5)
    a = alternating_on((2, 4, 5), 6)
    assert a.order == 3 and all(p.sign == 1 for p in a.elements)
    assert a <= s
    assert alternating_on((1, 2), 4).order == 1
    assert symmetric_on(range(1, 5), 4).order == 24


def test_viewed_at_degree_and_shift_group():
    g = grp(3, "(1 2 3)")
    wide = viewed_at_degree(g, 6)
    assert wide.degree == 6 and wide.order == 3 and wide.ground_set == (1, 2, 3)
    moved = shift_group(g, 3, 6)
    assert moved.ground_set == (4, 5, 6)
    assert parse_perm("(4 5 6)", 6) in moved
    with pytest.raises(ValueError):
        viewed_at_degree(g, 2)


# ---------------------------------------------------------------------------
# products


def test_direct_product_orders_and_overlap():
    left = symmetric_on((1, 2, 3), 5)
    right = symmetric_on((4, 5), 5)
    prod = direct_product(left, right)
    assert prod.order == 12 and prod.ground_set == (1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        direct_product(left, symmetric_on((3, 4), 5))
    with pytest.raises(DegreeMismatch):
        direct_product(left, symmetric_on((4, 5), 6))


def test_index2_gluing_exact_elements():
    """S_3 glued with S_2 over the trivial half: odd triples swap the tail."""
    b = symmetric_on((1, 2, 3), 5)
    l = symmetric_on((4, 5), 5)
    l0 = generate_group([], ground_set=(4, 5), degree=5)
    glued = index2_subdirect(b, l, l0)
    expected = {
        parse_perm(s, 5)
        for s in ("id", "(1 2 3)", "(1 3 2)", "(1 2)(4 5)", "(1 3)(4 5)", "(2 3)(4 5)")
    }
    assert set(glued.elements) == expected
    assert glued.order == 6


def test_index2_gluing_rejects_bad_shapes():
    l = symmetric_on((4, 5), 5)
    l0 = generate_group([], ground_set=(4, 5), degree=5)
    with pytest.raises(ValueError):
        index2_subdirect(alternating_on((1, 2, 3), 5), l, l0)
    with pytest.raises(ValueError):
        index2_subdirect(symmetric_on((1, 2, 3), 5), l, l)


# ---------------------------------------------------------------------------
# orbits and primitivity


def test_point_orbits():
    g = grp(6, "(1 2)", "(3 4 5)")
    assert orbits_on_points(g) == ((1, 2), (3, 4, 5))
    assert not is_transitive(g)
    assert is_transitive(grp(4, "(1 2 3 4)"))


def test_primitivity():
    assert not is_primitive(cyclic_4())
    assert is_primitive(grp(5, "(1 2 3 4 5)", "(2 5)(3 4)"))
    assert is_primitive(alternating_on(range(1, 6), 5))
    assert not is_primitive(grp(6, "(1 2 3)", "(1 4)(2 5)(3 6)"))


def test_conjugacy_in_the_symmetric_group():
    other = grp(4, "(1 3 2 4)")
    assert are_conjugate_in_symmetric(cyclic_4(), other)
    assert not are_conjugate_in_symmetric(cyclic_4(), klein_four())


# ---------------------------------------------------------------------------
# group files


def test_parse_group_text():
    text = """
    # a dihedral group
    degree: 4
    (1 2 3 4)
    (1 3)
    """
    g = parse_group_text(text)
    assert g.order == 8 and g.degree == 4


def test_group_text_errors():
    with pytest.raises(ParseError):
        parse_group_text("(1 2)\n")  # missing header
    with pytest.raises(ParseError):
        parse_group_text("degree: x\n")
    with pytest.raises(ParseError):
        parse_group_text("degree: 3\n(1 5)\n")


def test_read_group_file(tmp_path):
    path = tmp_path / "c4.grp"
    path.write_text("degree: 4\n(1 2 3 4)\n")
    assert read_group_file(path) == cyclic_4()


def test_element_count_matches_lagrange():
    s4 = symmetric_on(range(1, 5), 4)
    for g in (cyclic_4(), klein_four(), grp(4, "(1 2 3)")):
        assert math.factorial(4) % g.order == 0
        assert g <= s4
