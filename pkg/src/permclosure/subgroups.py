"""Exhaustive subgroup enumeration of small symmetric groups, the survey
of nontrivial closures at degree up to 6, and chain-length statistics.

Enumeration works up to conjugacy: starting from the cyclic subgroups,
each known class representative is extended by one element of prime-power
order at a time (subgroups are generated by their prime-power elements,
so the layered extension reaches every class).  Registering a class
stores the full conjugate orbit, which makes duplicate detection a set
lookup and yields exact class sizes.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterable

from .budgets import Budgets, resolve
from .closure import closure_chain, galois_closure
from .perm import PermGroup, _bfs_tuples, are_conjugate_in_symmetric

__all__ = [
    "SubgroupClass",
    "SubgroupCatalog",
    "all_subgroups",
    "chain_length_census",
    "ChainCensus",
    "Table1Row",
    "Table1Report",
    "table1_report",
    "reference_table_rows",
]

EXPECTED_TOTALS = {1: 1, 2: 2, 3: 6, 4: 30, 5: 156, 6: 1455}
EXPECTED_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 19, 6: 56}


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups: a canonical representative and
    the full list of member element-sets."""

    order: int
    class_size: int
    representative: PermGroup
    _members: tuple[tuple[tuple[int, ...], ...], ...]

    def member_groups(self, degree: int) -> tuple[PermGroup, ...]:
        return tuple(
            PermGroup._build(degree, m, None, None, 10**6) for m in self._members
        )


@dataclass(frozen=True)
class SubgroupCatalog:
    degree: int
    classes: tuple[SubgroupClass, ...]
    total_subgroups: int

    def all_groups(self) -> tuple[PermGroup, ...]:
        """Every individual subgroup, not just class representatives."""
        out: list[PermGroup] = []
        for cls in self.classes:
            out.extend(cls.member_groups(self.degree))
        return tuple(out)

    def class_of(self, group: PermGroup) -> SubgroupClass:
        key = tuple(group.element_images())
        for cls in self.classes:
            if key in cls._members:
                return cls
        raise LookupError("group is not a subgroup at this degree")


def _conj_tuple(t: tuple[int, ...], s: tuple[int, ...]) -> tuple[int, ...]:
    # relabeling of the image tuple t along s
    out = [0] * len(t)
    for i, v in enumerate(t):
        out[s[i]] = s[v]
    return tuple(out)


def _perm_order(t: tuple[int, ...]) -> int:
    seen = [False] * len(t)
    order = 1
    for start in range(len(t)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = t[p]
            length += 1
        order = math.lcm(order, length)
    return order


def _is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if m % p == 0:
            while m % p == 0:
                m //= p
            return m == 1
    return True  # m itself is prime beyond the small list at these scales


_catalog_cache: dict[int, SubgroupCatalog] = {}


def all_subgroups(
    n: int, budgets: Budgets | None = None, _extension_order: str = "forward"
) -> SubgroupCatalog:
    """All subgroups of the symmetric group of degree n, up to conjugacy.

    Supported for n up to 6.  ``_extension_order`` reverses the candidate
    scan; the result must not depend on it (checked in the test suite).
    """
    if not 1 <= n <= 6:
        raise ValueError("subgroup enumeration is supported for degree 1..6")
    if _extension_order == "forward" and n in _catalog_cache:
        return _catalog_cache[n]
    b = resolve(budgets)
    sn = sorted(itertools.permutations(range(n)))
    ident = tuple(range(n))
    pp_elements = [t for t in sn if _is_prime_power(_perm_order(t))]
    if _extension_order == "reversed":
        pp_elements = list(reversed(pp_elements))

    classes: list[dict] = []
    seen: dict[frozenset, int] = {}

    def register(h: frozenset) -> bool:
        if h in seen:
            return False
        members = {h}
        for s in sn:
            members.add(frozenset(_conj_tuple(t, s) for t in h))
        idx = len(classes)
        for m in members:
            seen[m] = idx
        classes.append({
            "order": len(h),
            "members": sorted(tuple(sorted(m)) for m in members),
        })
        return True

    register(frozenset([ident]))
    pending = [frozenset([ident])]
    while pending:
        base = pending.pop()
        covered = set(base)
        base_list = sorted(base)
        for x in pp_elements:
            if x in covered:
                continue
            grown = frozenset(_bfs_tuples(base_list + [x], n, b.materialization_bound))
            if register(grown):
                pending.append(grown)
            # the whole left coset x.base generates the same subgroup
            covered.update(_left_coset(x, base_list))

    out_classes = []
    for cls in classes:
        rep_tuples = cls["members"][0]
        rep = PermGroup._build(n, rep_tuples, None, None, b.materialization_bound)
        out_classes.append(
            SubgroupClass(cls["order"], len(cls["members"]), rep, tuple(cls["members"]))
        )
    out_classes.sort(key=lambda c: (c.order, c.class_size, c._members[0]))
    catalog = SubgroupCatalog(n, tuple(out_classes), sum(c.class_size for c in out_classes))
    if catalog.total_subgroups != EXPECTED_TOTALS[n]:
        raise AssertionError(
            f"enumeration found {catalog.total_subgroups} subgroups at degree {n}, "
            f"expected {EXPECTED_TOTALS[n]}"
        )
    if _extension_order == "forward":
        _catalog_cache[n] = catalog
    return catalog


def _left_coset(x: tuple[int, ...], base_list: list) -> list:
    return [tuple(x[v] for v in h) for h in base_list]


# ---------------------------------------------------------------------------
# chain-length statistics


@dataclass(frozen=True)
class ChainCensus:
    degree: int
    histogram: dict[int, int]
    max_distinct: int
    class_count: int

    def summary_dict(self) -> dict:
        return {
            "degree": self.degree,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "max_distinct": self.max_distinct,
            "class_count": self.class_count,
        }


def chain_length_census(
    n: int, workers: int = 1, budgets: Budgets | None = None
) -> ChainCensus:
    """For every subgroup class of degree n, the number of distinct groups
    in its closure chain, histogrammed."""
    catalog = all_subgroups(n, budgets=budgets)
    hist: dict[int, int] = {}
    for cls in catalog.classes:
        rep = closure_chain(cls.representative, workers=workers, budgets=budgets)
        hist[rep.distinct_count] = hist.get(rep.distinct_count, 0) + 1
    return ChainCensus(n, hist, max(hist) if hist else 1, len(catalog.classes))


# ---------------------------------------------------------------------------
# the closure survey at degree up to 6


@dataclass(frozen=True)
class Table1Row:
    degree: int
    largest_k: int
    group_name: str
    closure_name: str
    group_order: int
    closure_order: int
    class_size: int

    def as_text(self) -> str:
        return (
            f"{self.degree} | {self.largest_k} | {self.group_name} | {self.closure_name}"
        )

    def summary_dict(self) -> dict:
        return {
            "degree": self.degree,
            "largest_k": self.largest_k,
            "group": self.group_name,
            "closure": self.closure_name,
            "group_order": self.group_order,
            "closure_order": self.closure_order,
            "class_size": self.class_size,
        }


@dataclass(frozen=True)
class Table1Report:
    reference_rows: tuple[Table1Row, ...]
    extra_rows: tuple[Table1Row, ...]
    missing_reference: tuple[tuple[int, int, str, str], ...]
    matches_reference: bool
    wall_time: float

    def summary_dict(self, include_timing: bool = False) -> dict:
        out = {
            "reference_rows": [r.summary_dict() for r in self.reference_rows],
            "additional_rows": [r.summary_dict() for r in self.extra_rows],
            "missing_reference": [list(m) for m in self.missing_reference],
            "matches_reference": self.matches_reference,
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


def reference_table_rows() -> tuple[tuple[int, int, str, str], ...]:
    """The embedded reference survey: fixed-point-free subgroup classes of
    degree at most 6 that are not closed at alphabet size 2, with the
    largest alphabet size still not closed and the common closure."""
    from .data import load_reference_table

    return load_reference_table()


def _survey_name_pool(n: int) -> tuple[tuple[str, PermGroup], ...]:
    """Named comparison groups for the survey at one degree."""
    from .catalog import survey_candidates

    return survey_candidates(n)


def table1_report(
    workers: int = 1, budgets: Budgets | None = None
) -> Table1Report:
    """Recompute the survey of nontrivial closures for degrees 2..6 and
    align it with the embedded reference rows.

    Rows cover the subgroup classes without fixed points whose closure at
    alphabet size 2 is proper.  Classes matching a reference row are
    emitted in reference order; anything beyond the reference appears
    under ``extra_rows``.  The closure shown is the one at the largest
    non-closed alphabet size; at these degrees it coincides with the
    closure at every smaller alphabet size (asserted)."""
    t0 = time.perf_counter()
    computed: list[tuple[int, int, str, str, Table1Row]] = []
    for n in range(2, 7):
        catalog = all_subgroups(n, budgets=budgets)
        pool = _survey_name_pool(n)
        for cls in catalog.classes:
            rep = cls.representative
            if len(rep.ground_set) != n:
                continue  # fixed points: the class lives at a smaller degree
            chain = closure_chain(rep, workers=workers, budgets=budgets)
            if chain.largest_nonclosed_k is None:
                continue
            closure = galois_closure(rep, chain.largest_nonclosed_k, budgets=budgets)
            for entry in chain.entries:
                if entry.closure.order != rep.order and entry.closure != closure:
                    raise AssertionError(
                        "closure varies along the chain; survey format assumes one"
                    )
            gname = _match_name(rep, pool)
            cname = _match_name(closure, pool)
            row = Table1Row(
                n, chain.largest_nonclosed_k, gname, cname,
                rep.order, closure.order, cls.class_size,
            )
            computed.append((n, chain.largest_nonclosed_k, gname, cname, row))

    reference = reference_table_rows()
    by_key: dict[tuple[int, int, str, str], Table1Row] = {}
    for key_n, key_k, gname, cname, row in computed:
        by_key[(key_n, key_k, gname, cname)] = row
    matched: list[Table1Row] = []
    missing: list[tuple[int, int, str, str]] = []
    used: set[tuple[int, int, str, str]] = set()
    for ref in reference:
        row = by_key.get(ref)
        if row is None:
            missing.append(ref)
        else:
            matched.append(row)
            used.add(ref)
    extras = sorted(
        (row for key, row in by_key.items() if key not in used),
        key=lambda r: (r.degree, r.largest_k, r.group_name),
    )
    report = Table1Report(
        tuple(matched),
        tuple(extras),
        tuple(missing),
        not missing,
        time.perf_counter() - t0,
    )
    return report


def _match_name(group: PermGroup, pool: Iterable[tuple[str, PermGroup]]) -> str:
    hits = [name for name, cand in pool if are_conjugate_in_symmetric(group, cand)]
    if len(hits) == 1:
        return hits[0]
    if not hits:
        return f"unrecognized (order {group.order})"
    raise AssertionError(f"ambiguous naming: {hits}")
