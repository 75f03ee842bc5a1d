"""Tiny builders shared across test modules."""

from permclosure.perm import PermGroup, generate_group, parse_perm


def grp(degree: int, *cycles: str) -> PermGroup:
    """Group generated by cycle strings at the given degree."""
    return generate_group([parse_perm(c, degree) for c in cycles], degree=degree)


def klein_four() -> PermGroup:
    return grp(4, "(1 2)(3 4)", "(1 3)(2 4)")


def cyclic_4() -> PermGroup:
    return grp(4, "(1 2 3 4)")
