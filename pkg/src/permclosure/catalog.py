"""Named permutation groups, the primitive-group survey, and its checks.

Two kinds of names are resolvable through :func:`get_group`:

* parametric families ``C_n``, ``D_n``, ``A_n``, ``S_n`` for degrees up
  to 10, built on demand (dihedral groups are named by degree, so ``D_5``
  acts on 5 points and has 10 elements);
* the named groups listed in the packaged ``data/catalog.txt``, whose
  generator tables are validated on first access against the expected
  order, transitivity, and primitivity.

Affine and projective entries are defined arithmetically: points of
``AGL(1,q)`` are the field values shifted by one, and the projective
entries append the point at infinity as the last point.  The catalog file
itself can be regenerated with :func:`rebuild_catalog_text`; a mismatch
between the shipped file and the builders is a packaging error.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from functools import lru_cache

from .budgets import Budgets, resolve
from .closure import galois_closure, orbit_equivalent
from .data import load_catalog_text, load_expected_equiv_classes
from .errors import CatalogValidationError, UnknownGroupName
from .perm import (
    PermGroup,
    Permutation,
    alternating_on,
    direct_product,
    generate_group,
    index2_subdirect,
    is_primitive,
    is_transitive,
    parse_perm,
    format_perm,
    subdirect_from_homs,
    SubdirectSpec,
    symmetric_on,
)

__all__ = [
    "CatalogEntry",
    "get_group",
    "catalog_entries",
    "catalog_names",
    "rebuild_catalog_text",
    "survey_candidates",
    "primitive_survey_names",
    "SeressReport",
    "seress_report",
    "PrimitiveClosureReport",
    "primitive_3closed_report",
]

MAX_PARAMETRIC_DEGREE = 10


# ---------------------------------------------------------------------------
# small finite fields

_GF8_MOD = 0b1011  # x^3 + x + 1


def _gf8_mul(x: int, y: int) -> int:
    acc = 0
    for i in range(3):
        if (y >> i) & 1:
            acc ^= x << i
    for bit in (5, 4, 3):
        if (acc >> bit) & 1:
            acc ^= _GF8_MOD << (bit - 3)
    return acc


def _gf8_inv(x: int) -> int:
    return next(y for y in range(1, 8) if _gf8_mul(x, y) == 1)


# GF(9) as a + b*i with i^2 = -1; the element a*i + b is encoded as 3a + b.


def _gf9_mul(u: int, v: int) -> int:
    a, b = divmod(u, 3)
    c, d = divmod(v, 3)
    return 3 * ((a * d + b * c) % 3) + (b * d - a * c) % 3


def _gf9_inv(u: int) -> int:
    return next(v for v in range(1, 9) if _gf9_mul(u, v) == 1)


def _gf9_add_one(v: int) -> int:
    a, b = divmod(v, 3)
    return 3 * a + (b + 1) % 3


def _gf9_frobenius(v: int) -> int:
    a, b = divmod(v, 3)
    return 3 * ((3 - a) % 3) + b


# ---------------------------------------------------------------------------
# permutations from maps on field values

def _value_perm(q: int, f) -> Permutation:
    """The permutation of {1..q} induced by v -> f(v) on values 0..q-1."""
    return Permutation([f(v) + 1 for v in range(q)])


def _proj_point(q: int, value) -> int:
    return q + 1 if value is None else value + 1


def _proj_perm(q: int, f) -> Permutation:
    """Permutation of the projective line over a q-element field.

    Values 0..q-1 sit at points 1..q and ``None`` (infinity) at q+1."""
    domain = list(range(q)) + [None]
    return Permutation([_proj_point(q, f(v)) for v in domain])


def _fixing_infinity(f):
    def wrapped(v):
        return None if v is None else f(v)

    return wrapped


# ---------------------------------------------------------------------------
# generator builders for the named entries

def _gens_agl_1_5():
    return (
        _value_perm(5, lambda v: (v + 1) % 5),
        _value_perm(5, lambda v: (2 * v) % 5),
    )


def _gens_pgl_2_5():
    def recip(v):
        if v is None:
            return 0
        if v == 0:
            return None
        return pow(v, 3, 5)

    return (
        _proj_perm(5, _fixing_infinity(lambda v: (v + 1) % 5)),
        _proj_perm(5, _fixing_infinity(lambda v: (2 * v) % 5)),
        _proj_perm(5, recip),
    )


def _gens_wreath_c3_s2():
    return tuple(parse_perm(s, 6) for s in ("(1 2 3)", "(1 4)(2 5)(3 6)"))


def _gens_wreath_s3_s2():
    return tuple(
        parse_perm(s, 6) for s in ("(1 2 3)", "(1 2)", "(1 4)(2 5)(3 6)")
    )


def _gens_glued_wreath_s3_s2():
    # parity-linked bottom group plus the block swap
    return tuple(
        parse_perm(s, 6) for s in ("(1 2 3)", "(1 2)(4 5)", "(1 4)(2 5)(3 6)")
    )


def _gens_even_wreath_s3_s2():
    full = generate_group(_gens_wreath_s3_s2())
    evens = [p for p in full.elements if p.sign == 1]
    return PermGroup.from_elements(evens, ground_set=range(1, 7)).generators


def _gens_cube_rotations():
    # faces: 1 up, 2 front, 3 right, 4 back, 5 left, 6 down
    return tuple(parse_perm(s, 6) for s in ("(2 3 4 5)", "(1 2 6 4)"))


def _gens_cube_full():
    return _gens_cube_rotations() + (parse_perm("(1 6)(2 4)(3 5)", 6),)


def _gens_f21():
    return (
        _value_perm(7, lambda v: (v + 1) % 7),
        _value_perm(7, lambda v: (2 * v) % 7),
    )


def _gens_agl_1_8():
    return (
        _value_perm(8, lambda v: v ^ 1),
        _value_perm(8, lambda v: _gf8_mul(2, v)),
    )


def _gens_agammal_1_8():
    return _gens_agl_1_8() + (_value_perm(8, lambda v: _gf8_mul(v, v)),)


def _gens_asl_3_2():
    def rotate(v):  # cycle the three coordinates
        b2, b1, b0 = (v >> 2) & 1, (v >> 1) & 1, v & 1
        return (b1 << 2) | (b0 << 1) | b2

    def transvect(v):  # add the second coordinate to the first
        return v ^ (((v >> 1) & 1) << 2)

    return (
        _value_perm(8, lambda v: v ^ 1),
        _value_perm(8, rotate),
        _value_perm(8, transvect),
    )


def _gens_agl_1_9():
    return (
        _value_perm(9, _gf9_add_one),
        _value_perm(9, lambda v: _gf9_mul(4, v)),
    )


def _gens_agammal_1_9():
    return _gens_agl_1_9() + (_value_perm(9, _gf9_frobenius),)


def _gens_asl_2_3():
    def translate(v):
        x, y = divmod(v, 3)
        return 3 * x + (y + 1) % 3

    def upper(v):  # add the second coordinate to the first
        x, y = divmod(v, 3)
        return 3 * ((x + y) % 3) + y

    def lower(v):  # add the first coordinate to the second
        x, y = divmod(v, 3)
        return 3 * x + (y + x) % 3

    return tuple(_value_perm(9, f) for f in (translate, upper, lower))


def _gens_agl_2_3():
    def dilate(v):  # scale the first coordinate by 2
        x, y = divmod(v, 3)
        return 3 * ((2 * x) % 3) + y

    return _gens_asl_2_3() + (_value_perm(9, dilate),)


def _gens_psl_2_8():
    def recip(v):
        if v is None:
            return 0
        if v == 0:
            return None
        return _gf8_inv(v)

    return (
        _proj_perm(8, _fixing_infinity(lambda v: v ^ 1)),
        _proj_perm(8, _fixing_infinity(lambda v: _gf8_mul(2, v))),
        _proj_perm(8, recip),
    )


def _gens_pgammal_2_8():
    return _gens_psl_2_8() + (
        _proj_perm(8, _fixing_infinity(lambda v: _gf8_mul(v, v))),
    )


def _gens_pgl_2_9():
    def recip(v):
        if v is None:
            return 0
        if v == 0:
            return None
        return _gf9_inv(v)

    return (
        _proj_perm(9, _fixing_infinity(_gf9_add_one)),
        _proj_perm(9, _fixing_infinity(lambda v: _gf9_mul(4, v))),
        _proj_perm(9, recip),
    )


def _gens_pgammal_2_9():
    return _gens_pgl_2_9() + (_proj_perm(9, _fixing_infinity(_gf9_frobenius)),)


@dataclass(frozen=True)
class CatalogEntry:
    """One named group from the packaged catalog."""

    name: str
    degree: int
    order: int
    primitive: bool
    description: str
    generators: tuple[Permutation, ...]


# name, degree, order, primitive, description, generator builder
_NAMED_SPECS = (
    (
        "AGL(1,5)", 5, 20, True,
        "maps x -> ax + b on the 5-element field; point i is field value i - 1",
        _gens_agl_1_5,
    ),
    (
        "PGL(2,5)", 6, 120, True,
        "fractional linear maps on the projective line over the 5-element "
        "field; points 1..5 are field values 0..4 and point 6 is infinity",
        _gens_pgl_2_5,
    ),
    (
        "C_3 wr S_2", 6, 18, False,
        "independent 3-cycles inside the blocks {1,2,3} and {4,5,6}, plus "
        "the swap of the two blocks",
        _gens_wreath_c3_s2,
    ),
    (
        "S_3 wr S_2", 6, 72, False,
        "independent permutations inside the blocks {1,2,3} and {4,5,6}, "
        "plus the swap of the two blocks",
        _gens_wreath_s3_s2,
    ),
    (
        "S_3 wr_sd S_2", 6, 36, False,
        "index-2 subgroup of S_3 wr S_2 keeping the block swap: the two "
        "in-block permutations must have equal parity",
        _gens_glued_wreath_s3_s2,
    ),
    (
        "(S_3 wr S_2) cap A_6", 6, 36, False,
        "even elements of S_3 wr S_2",
        _gens_even_wreath_s3_s2,
    ),
    (
        "R(cube)", 6, 24, False,
        "rotations of the cube acting on its faces, numbered 1 up, 2 front, "
        "3 right, 4 back, 5 left, 6 down",
        _gens_cube_rotations,
    ),
    (
        "S(cube)", 6, 48, False,
        "all isometries of the cube on its faces: rotations together with "
        "the central inversion",
        _gens_cube_full,
    ),
    (
        "F_21", 7, 21, True,
        "maps x -> ax + b on the 7-element field with a a nonzero cube",
        _gens_f21,
    ),
    (
        "AGL(1,8)", 8, 56, True,
        "maps x -> ax + b on the 8-element field; point i is the field "
        "element with bit value i - 1",
        _gens_agl_1_8,
    ),
    (
        "AGammaL(1,8)", 8, 168, True,
        "AGL(1,8) extended by the squaring field automorphism",
        _gens_agammal_1_8,
    ),
    (
        "ASL(3,2)", 8, 1344, True,
        "invertible linear maps of the 2-element-field cube followed by "
        "translations; point i is the vector with bit value i - 1",
        _gens_asl_3_2,
    ),
    (
        "AGL(1,9)", 9, 72, True,
        "maps x -> ax + b on the 9-element field; the element a*i + b "
        "(i squaring to -1) sits at point 3a + b + 1",
        _gens_agl_1_9,
    ),
    (
        "AGammaL(1,9)", 9, 144, True,
        "AGL(1,9) extended by the cubing field automorphism",
        _gens_agammal_1_9,
    ),
    (
        "ASL(2,3)", 9, 216, True,
        "determinant-1 linear maps of the 3-element-field plane followed by "
        "translations; the vector (x, y) sits at point 3x + y + 1",
        _gens_asl_2_3,
    ),
    (
        "AGL(2,3)", 9, 432, True,
        "all invertible affine maps of the 3-element-field plane",
        _gens_agl_2_3,
    ),
    (
        "PSL(2,8)", 9, 504, True,
        "fractional linear maps on the projective line over the 8-element "
        "field; points 1..8 are field values and point 9 is infinity",
        _gens_psl_2_8,
    ),
    (
        "PGammaL(2,8)", 9, 1512, True,
        "PSL(2,8) extended by the squaring field automorphism",
        _gens_pgammal_2_8,
    ),
    (
        "PGL(2,9)", 10, 720, True,
        "fractional linear maps on the projective line over the 9-element "
        "field; points 1..9 are field values and point 10 is infinity",
        _gens_pgl_2_9,
    ),
    (
        "PGammaL(2,9)", 10, 1440, True,
        "PGL(2,9) extended by the cubing field automorphism",
        _gens_pgammal_2_9,
    ),
)

def _normalize_name(name: str) -> str:
    s = name.strip().lower()
    for src, dst in (
        ("≀", "wr"), ("γ", "gamma"), ("×", "x"), ("∩", "cap"), ("·", "x"),
    ):
        s = s.replace(src, dst)
    for junk in (" ", "\t", "_", "-"):
        s = s.replace(junk, "")
    return s


def rebuild_catalog_text() -> str:
    """Regenerate the catalog file content from the arithmetic builders."""
    lines = [
        "# Named permutation groups shipped with the package.",
        "# Fields: name | degree | order | primitive or imprimitive | generators",
        "# Generators are cycle strings separated by ';'.",
    ]
    for name, degree, order, primitive, _desc, builder in _NAMED_SPECS:
        gens = " ; ".join(format_perm(g) for g in builder())
        kind = "primitive" if primitive else "imprimitive"
        lines.append(f"{name} | {degree} | {order} | {kind} | {gens}")
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=1)
def _catalog() -> dict[str, tuple[CatalogEntry, PermGroup]]:
    """Parse and validate the packaged catalog file."""
    known = {
        _normalize_name(name): (name, degree, order, primitive, desc)
        for name, degree, order, primitive, desc, _builder in _NAMED_SPECS
    }
    out: dict[str, tuple[CatalogEntry, PermGroup]] = {}
    canonical_seen = set()
    for lineno, raw in enumerate(load_catalog_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 5:
            raise CatalogValidationError(
                f"catalog line {lineno}: expected 5 '|'-separated fields"
            )
        name, deg_s, order_s, kind, gens_s = parts
        key = _normalize_name(name)
        if key not in known:
            raise CatalogValidationError(f"catalog line {lineno}: unknown entry {name!r}")
        if key in out:
            raise CatalogValidationError(f"catalog line {lineno}: duplicate entry {name!r}")
        exp_name, exp_degree, exp_order, exp_primitive, desc = known[key]
        try:
            degree, order = int(deg_s), int(order_s)
        except ValueError:
            raise CatalogValidationError(
                f"catalog line {lineno}: degree and order must be integers"
            ) from None
        if (degree, order) != (exp_degree, exp_order):
            raise CatalogValidationError(
                f"{name}: file says degree {degree} order {order}, "
                f"expected degree {exp_degree} order {exp_order}"
            )
        if kind not in ("primitive", "imprimitive"):
            raise CatalogValidationError(
                f"catalog line {lineno}: flag must be primitive or imprimitive"
            )
        gens = tuple(parse_perm(s.strip(), degree) for s in gens_s.split(";"))
        group = generate_group(gens, ground_set=range(1, degree + 1))
        if group.order != order:
            raise CatalogValidationError(
                f"{name}: generators produce order {group.order}, not {order}"
            )
        if not is_transitive(group):
            raise CatalogValidationError(f"{name}: generators are not transitive")
        if is_primitive(group) != (kind == "primitive"):
            raise CatalogValidationError(f"{name}: primitivity flag is wrong")
        entry = CatalogEntry(exp_name, degree, order, exp_primitive, desc, gens)
        out[key] = (entry, group)
        canonical_seen.add(key)
    missing = [
        spec[0] for spec in _NAMED_SPECS
        if _normalize_name(spec[0]) not in canonical_seen
    ]
    if missing:
        raise CatalogValidationError(f"catalog file is missing entries: {missing}")
    return out


def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All named entries, validated, in catalog-file order."""
    return tuple(entry for entry, _group in _catalog().values())


def catalog_names() -> tuple[str, ...]:
    """Canonical names of the named entries, in catalog-file order."""
    return tuple(entry.name for entry in catalog_entries())


_PARAM_RE = re.compile(r"([acds])(\d+)")


@lru_cache(maxsize=None)
def _parametric_group(kind: str, n: int) -> PermGroup:
    points = range(1, n + 1)
    if kind == "s":
        return symmetric_on(points, n)
    if kind == "a":
        return alternating_on(points, n)
    if kind == "c":
        if n < 1:
            raise UnknownGroupName("cyclic groups need degree at least 1")
        cycle = Permutation([v % n + 1 for v in range(1, n + 1)])
        group = generate_group([cycle] if n > 1 else [], ground_set=points, degree=n)
        assert group.order == n
        return group
    if n < 3:
        raise UnknownGroupName("dihedral groups need degree at least 3")
    cycle = Permutation([v % n + 1 for v in range(1, n + 1)])
    flip = Permutation([1] + [n + 2 - v for v in range(2, n + 1)])
    group = generate_group([cycle, flip], ground_set=points)
    assert group.order == 2 * n
    return group


def get_group(name: str) -> PermGroup:
    """Resolve a group name: ``C_n``/``D_n``/``A_n``/``S_n`` or a catalog entry.

    Name matching ignores case, spacing, and underscores, and accepts the
    unicode wreath, intersection, and Gamma spellings.  Raises
    UnknownGroupName for anything else.
    """
    norm = _normalize_name(name)
    m = _PARAM_RE.fullmatch(norm)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n > MAX_PARAMETRIC_DEGREE:
            raise UnknownGroupName(
                f"parametric families stop at degree {MAX_PARAMETRIC_DEGREE}"
            )
        return _parametric_group(kind, n)
    cat = _catalog()
    if norm in cat:
        return cat[norm][1]
    raise UnknownGroupName(
        f"unknown group {name!r}; known: C_n, D_n, A_n, S_n "
        f"(n <= {MAX_PARAMETRIC_DEGREE}) and {', '.join(catalog_names())}"
    )


# ---------------------------------------------------------------------------
# the naming pool for the degree-at-most-6 closure survey


def _trivial_on(points: tuple[int, ...], degree: int) -> PermGroup:
    return generate_group([], ground_set=points, degree=degree)


@lru_cache(maxsize=None)
def survey_candidates(n: int) -> tuple[tuple[str, PermGroup], ...]:
    """Named comparison groups used to label survey rows at one degree.

    Every group acts on all n points (no fixed points), and the pool is
    rich enough to name each non-closed class of the survey and its
    closure.  Unicode display names match the reference table."""
    if n < 2 or n > 6:
        raise ValueError("the survey naming pool covers degrees 2..6")
    if n == 2:
        return (("S_2", get_group("S_2")),)
    if n == 3:
        return (("A_3", get_group("A_3")), ("S_3", get_group("S_3")))
    if n == 4:
        return tuple(
            (nm, get_group(nm)) for nm in ("C_4", "D_4", "A_4", "S_4")
        )
    if n == 5:
        s2 = symmetric_on((4, 5), 5)
        return (
            ("C_5", get_group("C_5")),
            ("D_5", get_group("D_5")),
            ("AGL(1,5)", get_group("AGL(1,5)")),
            ("A_5", get_group("A_5")),
            ("S_5", get_group("S_5")),
            (
                "S_3×_sd S_2",
                index2_subdirect(
                    symmetric_on((1, 2, 3), 5), s2, _trivial_on((4, 5), 5)
                ),
            ),
            ("A_3×S_2", direct_product(alternating_on((1, 2, 3), 5), s2)),
            ("S_3×S_2", direct_product(symmetric_on((1, 2, 3), 5), s2)),
        )
    s2 = symmetric_on((5, 6), 6)
    s3_right = symmetric_on((4, 5, 6), 6)
    d4 = generate_group([parse_perm("(1 2 3 4)", 6), parse_perm("(2 4)", 6)])
    c4 = generate_group([parse_perm("(1 2 3 4)", 6)])
    d4_glued = subdirect_from_homs(
        SubdirectSpec(
            left=d4,
            right=s2,
            quotient_size=2,
            left_classes={p: (0 if p._img in set(c4.element_images()) else 1) for p in d4.elements},
            right_classes={p: (0 if p.is_identity else 1) for p in s2.elements},
        )
    )
    return (
        ("PGL(2,5)", get_group("PGL(2,5)")),
        ("A_6", get_group("A_6")),
        ("S_6", get_group("S_6")),
        (
            "S_4×_sd S_2",
            index2_subdirect(
                symmetric_on((1, 2, 3, 4), 6), s2, _trivial_on((5, 6), 6)
            ),
        ),
        ("A_4×S_2", direct_product(alternating_on((1, 2, 3, 4), 6), s2)),
        ("S_4×S_2", direct_product(symmetric_on((1, 2, 3, 4), 6), s2)),
        (
            "S_3×_sd S_3",
            index2_subdirect(
                symmetric_on((1, 2, 3), 6), s3_right, alternating_on((4, 5, 6), 6)
            ),
        ),
        ("A_3×S_3", direct_product(alternating_on((1, 2, 3), 6), s3_right)),
        ("A_3×A_3", direct_product(alternating_on((1, 2, 3), 6), alternating_on((4, 5, 6), 6))),
        ("S_3×S_3", direct_product(symmetric_on((1, 2, 3), 6), s3_right)),
        ("D_4×_sd S_2", d4_glued),
        ("C_4×S_2", direct_product(c4, s2)),
        ("D_4×S_2", direct_product(d4, s2)),
        ("C_3≀S_2", get_group("C_3 wr S_2")),
        ("S_3≀_sd S_2", get_group("S_3 wr_sd S_2")),
        ("(S_3≀S_2)∩A_6", get_group("(S_3 wr S_2) cap A_6")),
        ("S_3≀S_2", get_group("S_3 wr S_2")),
        ("R(cube)", get_group("R(cube)")),
        ("S(cube)", get_group("S(cube)")),
    )


# ---------------------------------------------------------------------------
# the primitive survey: orbit-equivalence classes and closure over 3

_PRIMITIVE_SURVEY = {
    3: ("A_3", "S_3"),
    4: ("A_4", "S_4"),
    5: ("C_5", "D_5", "AGL(1,5)", "A_5", "S_5"),
    6: ("PGL(2,5)", "A_6", "S_6"),
    7: ("C_7", "D_7", "F_21", "A_7", "S_7"),
    8: ("AGL(1,8)", "AΓL(1,8)", "ASL(3,2)", "A_8", "S_8"),
    9: (
        "AGL(1,9)", "AΓL(1,9)", "ASL(2,3)", "AGL(2,3)",
        "PSL(2,8)", "PΓL(2,8)", "A_9", "S_9",
    ),
    10: ("PGL(2,9)", "PΓL(2,9)", "A_10", "S_10"),
}


def primitive_survey_names(n: int) -> tuple[str, ...]:
    """The cataloged primitive groups of one degree, smallest first."""
    try:
        return _PRIMITIVE_SURVEY[n]
    except KeyError:
        raise ValueError("the primitive survey covers degrees 3..10") from None


@dataclass(frozen=True)
class SeressReport:
    """Orbit-equivalence classes over a 2-letter alphabet at one degree."""

    degree: int
    names: tuple[str, ...]
    classes: tuple[tuple[str, ...], ...]
    expected: tuple[tuple[str, ...], ...]
    matches: bool
    wall_time: float

    def summary_dict(self, include_timing: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "classes": [list(c) for c in self.classes],
            "expected": [list(c) for c in self.expected],
            "matches": self.matches,
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


def seress_report(n: int, budgets: Budgets | None = None) -> SeressReport:
    """Group the cataloged primitive groups of degree n into
    orbit-equivalence classes over a 2-letter alphabet and compare with
    the expected classes."""
    t0 = time.perf_counter()
    b = resolve(budgets)
    names = primitive_survey_names(n)
    groups = [get_group(nm) for nm in names]
    leaders: list[int] = []
    assignment = [-1] * len(names)
    for i, g in enumerate(groups):
        for leader in leaders:
            if orbit_equivalent(groups[leader], g, 2, budgets=b):
                assignment[i] = leader
                break
        else:
            leaders.append(i)
            assignment[i] = i
    classes = tuple(
        tuple(names[i] for i in range(len(names)) if assignment[i] == leader)
        for leader in leaders
    )
    expected = load_expected_equiv_classes().get(n, ())
    matches = {frozenset(c) for c in classes} == {frozenset(c) for c in expected}
    return SeressReport(
        n, names, classes, expected, matches, time.perf_counter() - t0
    )


@dataclass(frozen=True)
class PrimitiveClosureReport:
    """Closure status over a 3-letter alphabet for one degree's primitives."""

    degree: int
    alphabet: int
    entries: tuple[tuple[str, bool, int], ...]  # name, closed, closure order
    expected_nonclosed: tuple[str, ...]
    matches: bool
    wall_time: float

    def summary_dict(self, include_timing: bool = False) -> dict:
        out = {
            "degree": self.degree,
            "alphabet": self.alphabet,
            "entries": [
                {"name": nm, "closed": closed, "closure_order": ordr}
                for nm, closed, ordr in self.entries
            ],
            "expected_nonclosed": list(self.expected_nonclosed),
            "matches": self.matches,
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


def primitive_3closed_report(
    n: int, workers: int = 1, budgets: Budgets | None = None
) -> PrimitiveClosureReport:
    """Check which cataloged primitive groups of degree n are closed over
    a 3-letter alphabet.  Expected: all of them except the alternating
    group once the degree is at least 4."""
    t0 = time.perf_counter()
    b = resolve(budgets)
    names = primitive_survey_names(n)
    entries = []
    for nm in names:
        g = get_group(nm)
        closure = galois_closure(g, 3, workers=workers, budgets=b)
        entries.append((nm, closure.order == g.order, closure.order))
    expected = (f"A_{n}",) if n >= 4 else ()
    computed_nonclosed = tuple(nm for nm, closed, _ in entries if not closed)
    matches = set(computed_nonclosed) == set(expected)
    return PrimitiveClosureReport(
        n, 3, tuple(entries), expected, matches, time.perf_counter() - t0
    )
