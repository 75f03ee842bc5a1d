"""Structure tests for groups that fail to be closed at small codegree.

Write d = degree - k.  Once the degree is strictly above
max(2^d, d^2 + d), a group that is not closed at alphabet size k must
have a rigid product shape: a single large orbit B whose complement D has
fewer than d points, with the group acting on B as at least the
alternating group, and one of

* alternating(B) x L, where L is the action induced on D, or
* the index-2 gluing of symmetric(B) with L over a half L0: even
  permutations of B paired with L0, odd ones with its complement.

In both shapes the closure is symmetric(B) x L.  ``classify_main``
recognizes the shapes, ``verify_main`` compares the resulting prediction
with the computed closure.  The module also hosts the classical orbit
closure on k-tuples of points (the value action) and the containment
check between the two closure notions, plus the curated degree-7 panel
used by the verification suite.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from .budgets import Budgets, resolve
from .closure import _group_from_union, _IndexTester, galois_closure
from .errors import BudgetExceeded, DegreeMismatch
from .perm import (
    PermGroup,
    Permutation,
    alternating_on,
    direct_product,
    full_orbits,
    generate_group,
    index2_subdirect,
    parse_perm,
    restrict_to,
    symmetric_on,
    viewed_at_degree,
)
from .tuples import cached_orbit_partition

__all__ = [
    "FormKind",
    "NonClosedForm",
    "MainVerifyReport",
    "classify_main",
    "verify_main",
    "wielandt_closure",
    "check_wielandt_containment",
    "degree7_panel",
    "degree7_panel_expectations",
]


class FormKind(Enum):
    ALTERNATING_TIMES_L = "AlternatingTimesL"
    PROPER_SUBDIRECT = "ProperSubdirect"
    PREDICTED_CLOSED = "PredictedClosed"
    OUT_OF_THEOREM_RANGE = "OutOfTheoremRange"


@dataclass(frozen=True)
class NonClosedForm:
    """Outcome of the shape test at one (degree, k) pair.

    ``block`` is the large orbit, ``complement`` the remaining points,
    ``complement_factor`` the action induced on them, ``complement_half``
    the distinguished index-2 part in the gluing case.  The first two
    kinds predict the group is not closed, with ``predicted_closure``
    attached; PredictedClosed predicts closure; OutOfTheoremRange makes
    no prediction at all."""

    kind: FormKind
    degree: int
    k: int
    codegree: int
    threshold: int
    block: tuple[int, ...] | None = None
    complement: tuple[int, ...] | None = None
    complement_factor: PermGroup | None = None
    complement_half: PermGroup | None = None
    predicted_closure: PermGroup | None = None
    note: str = ""

    @property
    def predicts_nonclosed(self) -> bool:
        return self.kind in (FormKind.ALTERNATING_TIMES_L, FormKind.PROPER_SUBDIRECT)

    def summary_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "degree": self.degree,
            "k": self.k,
            "codegree": self.codegree,
            "threshold": self.threshold,
            "note": self.note,
        }
        if self.block is not None:
            out["block"] = list(self.block)
            out["complement"] = list(self.complement or ())
        if self.complement_factor is not None:
            out["complement_factor_order"] = self.complement_factor.order
        if self.complement_half is not None:
            out["complement_half_order"] = self.complement_half.order
        if self.predicted_closure is not None:
            out["predicted_closure_order"] = self.predicted_closure.order
        return out


def _projection(group: PermGroup, points: tuple[int, ...]) -> PermGroup:
    """The action induced on an invariant point set, identity elsewhere."""
    elems = {restrict_to(p, points)._img for p in group.elements}
    return PermGroup._build(group.degree, elems, None, points or None, 10**6)


def classify_main(
    group: PermGroup, n: int, k: int, force: bool = False,
    budgets: Budgets | None = None,
) -> NonClosedForm:
    """Shape test at degree n and alphabet size k.

    With ``force`` the applicability threshold is skipped, which turns the
    test into a pure shape diagnostic; predictions are then only reliable
    inside the threshold regime."""
    if n < group.degree:
        raise ValueError(f"degree {n} is below the group's degree {group.degree}")
    g = viewed_at_degree(group, n)
    d = n - k
    if d < 1:
        return NonClosedForm(
            FormKind.PREDICTED_CLOSED, n, k, d, 0,
            note="alphabet at least the degree; every group is closed there",
        )
    threshold = max(2**d, d * d + d)
    if n <= threshold and not force:
        return NonClosedForm(
            FormKind.OUT_OF_THEOREM_RANGE, n, k, d, threshold,
            note=f"degree {n} is not above the threshold {threshold}",
        )
    orbits = full_orbits(g, n)
    candidates = [o for o in orbits if n - len(o) < d]
    if not candidates:
        return NonClosedForm(
            FormKind.PREDICTED_CLOSED, n, k, d, threshold,
            note="no orbit has complement smaller than the codegree",
        )
    block = max(candidates, key=len)
    note = ""
    if len(candidates) > 1:
        note = f"{len(candidates)} candidate blocks; largest chosen"
    complement = tuple(p for p in range(1, n + 1) if p not in set(block))
    on_block = _projection(g, block)
    on_complement = _projection(g, complement)
    bfact = math.factorial(len(block))
    sym_block = symmetric_on(block, n)

    # alternating x L: even on the block, full product order
    if (
        on_block.order * 2 == bfact
        and all(p.sign == 1 for p in on_block.generators)
        and g.order == on_block.order * on_complement.order
    ):
        alt_block = alternating_on(block, n)
        product = direct_product(alt_block, on_complement)
        if product == g:
            return NonClosedForm(
                FormKind.ALTERNATING_TIMES_L, n, k, d, threshold,
                block=block, complement=complement,
                complement_factor=on_complement,
                predicted_closure=direct_product(sym_block, on_complement),
                note=note or "alternating on the block times the complement action",
            )

    # symmetric-block gluing: half the product order, complement action split
    if (
        on_block.order == bfact
        and g.order * 2 == bfact * on_complement.order
        and on_complement.order % 2 == 0
    ):
        half_tuples = {
            restrict_to(p, complement)._img
            for p in g.elements
            if restrict_to(p, block).sign == 1
        }
        if len(half_tuples) * 2 == on_complement.order:
            try:
                half = PermGroup._build(n, half_tuples, None, complement or None, 10**6)
                rebuilt = index2_subdirect(sym_block, on_complement, half)
            except ValueError:
                rebuilt = None
            if rebuilt is not None and rebuilt == g:
                return NonClosedForm(
                    FormKind.PROPER_SUBDIRECT, n, k, d, threshold,
                    block=block, complement=complement,
                    complement_factor=on_complement,
                    complement_half=half,
                    predicted_closure=direct_product(sym_block, on_complement),
                    note=note or "index-2 gluing of the symmetric block with the complement action",
                )

    return NonClosedForm(
        FormKind.PREDICTED_CLOSED, n, k, d, threshold,
        block=block, complement=complement,
        note=note or "block action matches neither shape",
    )


@dataclass(frozen=True)
class MainVerifyReport:
    form: NonClosedForm
    computed_closure: PermGroup
    applicable: bool
    predicted_nonclosed: bool
    computed_nonclosed: bool
    agree: bool

    def summary_dict(self) -> dict:
        return {
            "form": self.form.summary_dict(),
            "computed_closure_order": self.computed_closure.order,
            "applicable": self.applicable,
            "predicted_nonclosed": self.predicted_nonclosed,
            "computed_nonclosed": self.computed_nonclosed,
            "agree": self.agree,
        }


def verify_main(
    group: PermGroup, n: int, k: int, workers: int = 1,
    budgets: Budgets | None = None,
) -> MainVerifyReport:
    """Compare the shape prediction against the computed closure.

    Inside the threshold regime, agreement means: predicted non-closed
    groups have exactly the predicted closure, predicted closed groups
    equal their closure.  Outside it no claim is checked."""
    form = classify_main(group, n, k, budgets=budgets)
    g = viewed_at_degree(group, n)
    closure = galois_closure(g, k, workers=workers, budgets=budgets)
    computed_nonclosed = closure.order != g.order
    if form.kind is FormKind.OUT_OF_THEOREM_RANGE:
        return MainVerifyReport(form, closure, False, False, computed_nonclosed, True)
    if form.predicts_nonclosed:
        agree = computed_nonclosed and closure == form.predicted_closure
        return MainVerifyReport(form, closure, True, True, computed_nonclosed, agree)
    agree = not computed_nonclosed
    return MainVerifyReport(form, closure, True, False, computed_nonclosed, agree)


# ---------------------------------------------------------------------------
# orbit closure on tuples of points (the value action)


def wielandt_closure(
    group: PermGroup, k: int, budgets: Budgets | None = None
) -> PermGroup:
    """The largest group with the same orbits on k-tuples of points.

    Candidates are restricted to permutations preserving every point
    orbit setwise, which is sound: orbits of constant tuples recover the
    point orbits, so any permutation with the same tuple orbits preserves
    them."""
    b = resolve(budgets)
    n = group.degree
    orbits = full_orbits(group, n)
    pool = 1
    for o in orbits:
        pool *= math.factorial(len(o))
    if pool > b.candidate_budget:
        raise BudgetExceeded("candidate", pool, b.candidate_budget)
    part = cached_orbit_partition(group, k, budgets=b, value_action=True)
    tester = _IndexTester.from_partition(part)
    accepted: list[tuple[int, ...]] = []
    for combo in itertools.product(*(itertools.permutations(o) for o in orbits)):
        img = list(range(n))
        for orbit, images in zip(orbits, combo):
            for p, v in zip(orbit, images):
                img[p - 1] = v - 1
        sigma = Permutation._raw(tuple(img))
        if tester.accepts_value(sigma):
            accepted.append(sigma._img)
    return _group_from_union(group, accepted, sorted(accepted), b.materialization_bound)


def check_wielandt_containment(
    group: PermGroup, k: int, workers: int = 1, budgets: Budgets | None = None
) -> bool:
    """Closure at alphabet size k+1 sits inside the orbit closure on
    k-tuples of points."""
    fine = galois_closure(group, k + 1, workers=workers, budgets=budgets)
    coarse = wielandt_closure(group, k, budgets=budgets)
    return fine.is_subgroup_of(coarse)


# ---------------------------------------------------------------------------
# the degree-7 panel


def degree7_panel() -> tuple[tuple[str, PermGroup], ...]:
    """Ten structurally varied groups of degree 7 used to exercise the
    shape test at k = 5."""

    def p(text: str) -> Permutation:
        return parse_perm(text, 7)

    s5 = symmetric_on(range(1, 6), 7)
    s2_tail = symmetric_on((6, 7), 7)
    triv_tail = generate_group([], degree=7, ground_set=(6, 7))
    panel = (
        ("A_7", alternating_on(range(1, 8), 7)),
        ("A_6 embedded", alternating_on(range(1, 7), 7)),
        ("S_7", symmetric_on(range(1, 8), 7)),
        ("C_7", generate_group([p("(1 2 3 4 5 6 7)")])),
        ("D_7", generate_group([p("(1 2 3 4 5 6 7)"), p("(2 7)(3 6)(4 5)")])),
        ("S_3 x S_4", direct_product(symmetric_on((1, 2, 3), 7), symmetric_on((4, 5, 6, 7), 7))),
        ("A_3 x A_4", direct_product(alternating_on((1, 2, 3), 7), alternating_on((4, 5, 6, 7), 7))),
        ("S_5 sd S_2", index2_subdirect(s5, s2_tail, triv_tail)),
        ("F_21", generate_group([p("(1 2 3 4 5 6 7)"), p("(2 3 5)(4 7 6)")])),
        ("S_6 embedded", symmetric_on(range(1, 7), 7)),
    )
    return panel


def degree7_panel_expectations() -> dict[str, FormKind]:
    """Hand-derived expected shape kinds for the panel at k = 5."""
    return {
        "A_7": FormKind.ALTERNATING_TIMES_L,
        "A_6 embedded": FormKind.ALTERNATING_TIMES_L,
        "S_7": FormKind.PREDICTED_CLOSED,
        "C_7": FormKind.PREDICTED_CLOSED,
        "D_7": FormKind.PREDICTED_CLOSED,
        "S_3 x S_4": FormKind.PREDICTED_CLOSED,
        "A_3 x A_4": FormKind.PREDICTED_CLOSED,
        "S_5 sd S_2": FormKind.PREDICTED_CLOSED,
        "F_21": FormKind.PREDICTED_CLOSED,
        "S_6 embedded": FormKind.PREDICTED_CLOSED,
    }
