"""Tuple spaces, index maps, and orbit partitions."""

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from helpers import cyclic_4, grp, klein_four
from permclosure.budgets import Budgets
from permclosure.errors import BudgetExceeded, DegreeMismatch
from permclosure.perm import Permutation, symmetric_on
from permclosure.tuples import (
    TupleSpace,
    act_points,
    act_tuple,
    cached_orbit_partition,
    clear_partition_cache,
    kpow_orbit_partition,
    orbit_partition,
    tuple_stabilizer,
)


def perms_of(n):
    return st.permutations(range(1, n + 1)).map(Permutation)


def tuples_over(n, k):
    return st.tuples(*([st.integers(1, k)] * n))


# ---------------------------------------------------------------------------
# actions on tuples


@given(tuples_over(5, 3), perms_of(5))
def test_coordinate_action_selects_entries(a, sigma):
    moved = act_tuple(a, sigma)
    for i in range(1, 6):
        assert moved[i - 1] == a[sigma(i) - 1]


@given(tuples_over(5, 3), perms_of(5), perms_of(5))
def test_coordinate_action_is_a_right_action(a, p, q):
    assert act_tuple(a, p * q) == act_tuple(act_tuple(a, p), q)


@given(tuples_over(4, 4), perms_of(4))
def test_value_action_maps_entries(r, sigma):
    assert act_points(r, sigma) == tuple(sigma(v) for v in r)


def test_action_degree_checks():
    with pytest.raises(DegreeMismatch):
        act_tuple((1, 2), Permutation([1, 2, 3]))
    with pytest.raises(ValueError):
        act_points((5,), Permutation([1, 2, 3]))


# ---------------------------------------------------------------------------
# the indexed space


@given(st.integers(1, 5), st.integers(2, 4), st.data())
def test_encode_decode_round_trip(n, k, data):
    space = TupleSpace(n, k)
    idx = data.draw(st.integers(0, space.size - 1))
    assert space.encode(space.decode(idx)) == idx


def test_indexing_is_lexicographic():
    space = TupleSpace(3, 2)
    listed = [space.decode(i) for i in range(space.size)]
    assert listed == sorted(itertools.product((1, 2), repeat=3))


def test_encode_rejects_bad_tuples():
    space = TupleSpace(3, 2)
    with pytest.raises(ValueError):
        space.encode((1, 2))
    with pytest.raises(ValueError):
        space.encode((1, 2, 3))
    with pytest.raises(ValueError):
        space.decode(space.size)


@given(perms_of(4), st.data())
def test_coordinate_index_map_matches_literal_action(sigma, data):
    space = TupleSpace(4, 3)
    imap = space.coordinate_index_map(sigma)
    idx = data.draw(st.integers(0, space.size - 1))
    assert space.decode(int(imap[idx])) == act_tuple(space.decode(idx), sigma)


@given(perms_of(3), st.data())
def test_value_index_map_matches_literal_action(sigma, data):
    space = TupleSpace(4, 3)
    imap = space.value_index_map(sigma)
    idx = data.draw(st.integers(0, space.size - 1))
    assert space.decode(int(imap[idx])) == act_points(space.decode(idx), sigma)


def test_tuple_space_budget():
    with pytest.raises(BudgetExceeded):
        TupleSpace(10, 4, budgets=Budgets(tuple_budget=1000))
    with pytest.raises(ValueError):
        TupleSpace(3, 1)
    with pytest.raises(ValueError):
        TupleSpace(0, 2)


# ---------------------------------------------------------------------------
# orbit partitions


def brute_orbits(group, n, k):
    """Orbit label of each tuple by direct expansion, no index maps."""
    space = TupleSpace(n, k)
    labels = {}
    for idx in range(space.size):
        a = space.decode(idx)
        if a in labels:
            continue
        orbit = {act_tuple(a, p) for p in group.elements}
        least = min(space.encode(b) for b in orbit)
        for b in orbit:
            labels[b] = least
    return [labels[space.decode(i)] for i in range(space.size)]


@pytest.mark.parametrize("k", [2, 3])
def test_partition_matches_brute_force(k):
    for group in (cyclic_4(), klein_four(), grp(4, "(1 2 3)"), symmetric_on(range(1, 5), 4)):
        part = orbit_partition(group, TupleSpace(4, k))
        assert part.labels.tolist() == brute_orbits(group, 4, k)


def test_known_orbit_counts():
    assert orbit_partition(cyclic_4(), TupleSpace(4, 2)).orbit_count == 6
    assert orbit_partition(klein_four(), TupleSpace(4, 2)).orbit_count == 7
    assert orbit_partition(symmetric_on(range(1, 5), 4), TupleSpace(4, 2)).orbit_count == 5


def test_partition_of_subgroup_refines_supergroup():
    space = TupleSpace(4, 2)
    fine = orbit_partition(cyclic_4(), space)
    coarse = orbit_partition(symmetric_on(range(1, 5), 4), space)
    assert fine.refines(coarse)
    assert not coarse.refines(fine)
    # the 4-cycle and the full dihedral group have the same two-letter orbits
    dihedral = orbit_partition(grp(4, "(1 2 3 4)", "(1 3)"), space)
    assert fine.refines(dihedral) and dihedral.refines(fine)
    assert fine.equals(dihedral)


def test_partition_queries():
    part = orbit_partition(cyclic_4(), TupleSpace(4, 2))
    assert part.same_orbit((1, 1, 2, 2), (2, 2, 1, 1))
    assert not part.same_orbit((1, 1, 2, 2), (1, 2, 1, 2))
    assert part.canonical_tuple((2, 2, 1, 1)) == (1, 1, 2, 2)
    assert int(part.orbit_sizes.sum()) == 16
    census = part.census()
    assert census["orbit_count"] == 6
    assert census["representatives"][0] == [1, 1, 1, 1]


def test_value_action_partition():
    """Orbits of ordered point pairs under the 4-cycle: 4 diagonal + 3 off."""
    part = kpow_orbit_partition(cyclic_4(), 2)
    assert part.orbit_count == 4
    brute = set()
    for r in itertools.product(range(1, 5), repeat=2):
        orbit = frozenset(act_points(r, p) for p in cyclic_4().elements)
        brute.add(orbit)
    assert len(brute) == 4


def test_tuple_stabilizer():
    stab = tuple_stabilizer((1, 1, 2, 3))
    assert stab.order == 2
    for p in stab.elements:
        assert act_tuple((1, 1, 2, 3), p) == (1, 1, 2, 3)
    assert tuple_stabilizer((1, 2, 3, 4)).order == 1
    assert tuple_stabilizer((1, 1, 1, 1)).order == 24
    assert tuple_stabilizer((1, 1, 2, 2)).order == 4
    with pytest.raises(ValueError):
        tuple_stabilizer((1, 1, 2), degree=4)


def test_cached_partition_reuses_objects():
    clear_partition_cache()
    a = cached_orbit_partition(cyclic_4(), 2)
    b = cached_orbit_partition(cyclic_4(), 2)
    assert a is b
    c = cached_orbit_partition(cyclic_4(), 2, value_action=True)
    assert c is not a
    clear_partition_cache()
    assert cached_orbit_partition(cyclic_4(), 2) is not a


def test_census_is_deterministic():
    one = orbit_partition(klein_four(), TupleSpace(4, 2)).census()
    two = orbit_partition(klein_four(), TupleSpace(4, 2)).census()
    assert one == two
    truncated = orbit_partition(klein_four(), TupleSpace(4, 2)).census(max_listed=3)
    assert truncated["representatives_truncated"] is True
    assert len(truncated["representatives"]) == 3


def test_partition_rejects_oversized_group_degree():
    with pytest.raises(DegreeMismatch):
        orbit_partition(symmetric_on(range(1, 6), 5), TupleSpace(4, 2))


def test_partition_on_wider_space_leaves_extra_coordinates():
    """A degree-2 swap inside arity 3: the third coordinate rides along."""
    part = orbit_partition(grp(2, "(1 2)"), TupleSpace(3, 2))
    assert part.same_orbit((1, 2, 1), (2, 1, 1))
    assert not part.same_orbit((1, 2, 1), (1, 2, 2))
    assert part.orbit_count == 6


def test_label_arrays_use_least_indices():
    part = orbit_partition(cyclic_4(), TupleSpace(4, 2))
    reps = part.representatives
    assert np.array_equal(np.sort(reps), reps)
    assert part.labels.min() == 0
    for r in reps.tolist():
        assert part.labels[r] == r
