"""Tuple spaces and orbit partitions.

A TupleSpace indexes all length-``arity`` tuples over {1..alphabet} in mixed
radix: coordinate 1 is the most significant digit and digit values are
``value - 1``, so lexicographic order of tuples coincides with numeric order
of indices.  Two group actions matter here:

* the coordinate action on alphabet^degree, where sigma sends a to the tuple
  with entries ``a[sigma(i)]`` (so the composite ``p*q`` acts as p then q
  on the right: ``a^(p*q) = (a^p)^q``);
* the value action on degree^arity, where sigma maps each entry through
  ``sigma`` itself.

Orbit partitions are computed by union-find over per-generator index maps and
exposed as a label array: ``labels[t]`` is the least index in the orbit of t,
which is also the lexicographically least member, by the encoding above.
"""

from __future__ import annotations

from collections import OrderedDict
from typing import Iterable

import numpy as np

from .budgets import Budgets, resolve
from .errors import BudgetExceeded, DegreeMismatch
from .perm import PermGroup, Permutation, extend_degree

__all__ = [
    "TupleSpace",
    "OrbitPartition",
    "act_tuple",
    "act_points",
    "orbit_partition",
    "kpow_orbit_partition",
    "tuple_stabilizer",
    "cached_orbit_partition",
]


def act_tuple(a: tuple[int, ...], sigma: Permutation) -> tuple[int, ...]:
    """Coordinate action: entry i of the result is ``a[sigma(i)]``."""
    if len(a) != sigma.degree:
        raise DegreeMismatch(f"tuple length {len(a)} vs degree {sigma.degree}")
    img = sigma._img
    return tuple(a[img[i]] for i in range(len(a)))


def act_points(r: tuple[int, ...], sigma: Permutation) -> tuple[int, ...]:
    """Value action: each entry of r (a point) is mapped through sigma."""
    img = sigma._img
    for v in r:
        if not 1 <= v <= sigma.degree:
            raise ValueError(f"entry {v} outside 1..{sigma.degree}")
    return tuple(img[v - 1] + 1 for v in r)


class TupleSpace:
    """All tuples of a fixed arity over {1..alphabet}, mixed-radix indexed."""

    __slots__ = ("arity", "alphabet", "size", "_weights", "_digits")

    def __init__(self, arity: int, alphabet: int, budgets: Budgets | None = None):
        if arity < 1:
            raise ValueError("arity must be at least 1")
        if alphabet < 2:
            raise ValueError("alphabet must be at least 2")
        b = resolve(budgets)
        size = alphabet**arity
        if size > b.tuple_budget:
            raise BudgetExceeded("tuple-space", size, b.tuple_budget)
        self.arity = arity
        self.alphabet = alphabet
        self.size = size
        self._weights = None
        self._digits = None

    @property
    def weights(self) -> np.ndarray:
        """Mixed-radix weights, most significant first."""
        if self._weights is None:
            k = self.alphabet
            w = np.empty(self.arity, dtype=np.int64)
            acc = 1
            for j in range(self.arity - 1, -1, -1):
                w[j] = acc
                acc *= k
            self._weights = w
        return self._weights

    @property
    def digits(self) -> np.ndarray:
        """Row t holds the 0-based digits of index t, shape (size, arity)."""
        if self._digits is None:
            idx = np.arange(self.size, dtype=np.int64)
            d = np.empty((self.size, self.arity), dtype=np.int32)
            for j in range(self.arity - 1, -1, -1):
                d[:, j] = idx % self.alphabet
                idx //= self.alphabet
            self._digits = d
        return self._digits

    def encode(self, a: Iterable[int]) -> int:
        t = tuple(a)
        if len(t) != self.arity:
            raise ValueError(f"tuple length {len(t)}, expected {self.arity}")
        idx = 0
        for v in t:
            if not 1 <= v <= self.alphabet:
                raise ValueError(f"entry {v} outside 1..{self.alphabet}")
            idx = idx * self.alphabet + (v - 1)
        return idx

    def decode(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise ValueError(f"index {index} outside 0..{self.size - 1}")
        out = []
        for _ in range(self.arity):
            out.append(index % self.alphabet + 1)
            index //= self.alphabet
        return tuple(reversed(out))

    def coordinate_index_map(self, sigma: Permutation) -> np.ndarray:
        """Index array I with I[t] = index of the coordinate action of sigma.

        Works by permuting the weight vector: moving digit j to weight
        position ``sigma^-1(j)`` is a single matrix-vector product.
        """
        return self.digits @ self.coordinate_weights(sigma)

    def coordinate_weights(self, sigma: Permutation) -> np.ndarray:
        """The permuted weight vector used by ``coordinate_index_map``."""
        if sigma.degree != self.arity:
            raise DegreeMismatch(f"degree {sigma.degree} vs arity {self.arity}")
        inv = sigma.inverse()._img
        w = self.weights
        return np.array([w[inv[j]] for j in range(self.arity)], dtype=np.int64)

    def value_index_map(self, sigma: Permutation) -> np.ndarray:
        """Index array for the value action of sigma on alphabet points."""
        if sigma.degree != self.alphabet:
            raise DegreeMismatch(f"degree {sigma.degree} vs alphabet {self.alphabet}")
        vimg = np.array(sigma._img, dtype=np.int64)
        return vimg[self.digits] @ self.weights

    def __repr__(self) -> str:
        return f"TupleSpace(arity={self.arity}, alphabet={self.alphabet}, size={self.size})"


class OrbitPartition:
    """Orbits of a tuple space under a group action.

    ``labels[t]`` is the least tuple index in the orbit of t; orbits compare
    equal exactly when their label arrays do.
    """

    __slots__ = ("space", "parent", "labels", "orbit_count", "_reps", "_counts", "_order")

    def __init__(self, space: TupleSpace, parent: np.ndarray, labels: np.ndarray):
        self.space = space
        self.parent = parent
        self.labels = labels
        self._reps = None
        self._counts = None
        self._order = None
        self.orbit_count = int(np.unique(labels).size)

    # -- queries

    def canonical_index(self, t: int) -> int:
        return int(self.labels[t])

    def canonical_tuple(self, a: Iterable[int]) -> tuple[int, ...]:
        return self.space.decode(int(self.labels[self.space.encode(a)]))

    def same_orbit(self, a: Iterable[int], b: Iterable[int]) -> bool:
        return bool(
            self.labels[self.space.encode(a)] == self.labels[self.space.encode(b)]
        )

    @property
    def representatives(self) -> np.ndarray:
        if self._reps is None:
            self._reps, self._counts = np.unique(self.labels, return_counts=True)
        return self._reps

    @property
    def orbit_sizes(self) -> np.ndarray:
        if self._counts is None:
            self.representatives
        return self._counts

    def size_of_orbit_of(self, t: int) -> int:
        reps = self.representatives
        pos = int(np.searchsorted(reps, self.labels[t]))
        return int(self._counts[pos])

    def equals(self, other: "OrbitPartition") -> bool:
        if self.space.arity != other.space.arity or self.space.alphabet != other.space.alphabet:
            raise DegreeMismatch("partitions live on different tuple spaces")
        return bool(np.array_equal(self.labels, other.labels))

    def refines(self, other: "OrbitPartition") -> bool:
        """Every orbit here is contained in an orbit of the other partition."""
        if self.space.size != other.space.size:
            raise DegreeMismatch("partitions live on different tuple spaces")
        return bool(np.all(other.labels[self.labels] == other.labels))

    def test_order(self) -> np.ndarray:
        """Indices ordered for early-exit scanning: small orbits first,
        each orbit's canonical member leading, ties by index."""
        if self._order is None:
            reps = self.representatives
            sizes = self._counts[np.searchsorted(reps, self.labels)]
            idx = np.arange(self.space.size)
            not_canon = (self.labels != idx).astype(np.int8)
            self._order = np.lexsort((idx, not_canon, sizes))
        return self._order

    def census(self, max_listed: int = 64) -> dict:
        """A deterministic summary used by reports and the CLI."""
        reps = self.representatives
        sizes = self._counts
        hist: dict[int, int] = {}
        for s in sizes.tolist():
            hist[s] = hist.get(s, 0) + 1
        listed = [self.space.decode(int(r)) for r in reps[:max_listed]]
        return {
            "orbit_count": self.orbit_count,
            "size_histogram": {str(k): v for k, v in sorted(hist.items())},
            "representatives": [list(t) for t in listed],
            "representatives_truncated": bool(reps.size > max_listed),
        }

    def __repr__(self) -> str:
        return (
            f"OrbitPartition(space={self.space!r}, orbit_count={self.orbit_count})"
        )


# ---------------------------------------------------------------------------
# building partitions


class _UnionFind:
    """Union by size with path compression, tracking each class minimum."""

    __slots__ = ("parent", "size", "min")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.min = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        if self.min[rb] < self.min[ra]:
            self.min[ra] = self.min[rb]


def _partition_from_index_maps(space: TupleSpace, index_maps: list[np.ndarray]) -> OrbitPartition:
    uf = _UnionFind(space.size)
    union = uf.union
    for imap in index_maps:
        for t, u in enumerate(imap.tolist()):
            if t != u:
                union(t, u)
    parent = np.array(uf.parent, dtype=np.int64)
    # resolve to roots by pointer jumping
    while True:
        nxt = parent[parent]
        if np.array_equal(nxt, parent):
            break
        parent = nxt
    minv = np.array(uf.min, dtype=np.int64)
    labels = minv[parent]
    return OrbitPartition(space, parent, labels)


def _dedup_maps(maps: list[np.ndarray]) -> list[np.ndarray]:
    out: list[np.ndarray] = []
    for m in maps:
        if not any(np.array_equal(m, seen) for seen in out):
            out.append(m)
    return out


def orbit_partition(
    group: PermGroup, space: TupleSpace, budgets: Budgets | None = None
) -> OrbitPartition:
    """Orbits of the coordinate action of the group on the space.

    The group's degree must equal the space's arity, or be smaller, in which
    case the extra coordinates are left untouched.
    """
    if group.degree > space.arity:
        raise DegreeMismatch(
            f"group degree {group.degree} exceeds space arity {space.arity}"
        )
    maps = []
    for g in group.generators:
        if g.is_identity:
            continue
        ge = extend_degree(g, space.arity) if g.degree < space.arity else g
        maps.append(space.coordinate_index_map(ge))
    return _partition_from_index_maps(space, _dedup_maps(maps))


def kpow_orbit_partition(
    group: PermGroup, k: int, budgets: Budgets | None = None
) -> OrbitPartition:
    """Orbits of the value action on (degree)^k: k-tuples of points."""
    if k < 1:
        raise ValueError("k must be at least 1")
    space = TupleSpace(k, group.degree, budgets=budgets)
    maps = []
    for g in group.generators:
        if g.is_identity:
            continue
        maps.append(space.value_index_map(g))
    return _partition_from_index_maps(space, _dedup_maps(maps))


def tuple_stabilizer(
    a: tuple[int, ...], degree: int | None = None, budgets: Budgets | None = None
) -> PermGroup:
    """The full stabilizer of a tuple under the coordinate action: all
    permutations of positions that hold equal values.

    Generated by adjacent transpositions inside each value class; elements
    are enumerated directly as products over the classes.
    """
    n = len(a) if degree is None else degree
    if degree is not None and len(a) != degree:
        raise ValueError(f"tuple length {len(a)} does not match degree {degree}")
    b = resolve(budgets)
    classes: dict[int, list[int]] = {}
    for pos, v in enumerate(a):
        classes.setdefault(v, []).append(pos)
    total = 1
    for positions in classes.values():
        total *= _factorial(len(positions))
    if total > b.materialization_bound:
        raise BudgetExceeded("materialization", total, b.materialization_bound)

    import itertools

    per_class = []
    for _, positions in sorted(classes.items()):
        per_class.append([dict(zip(positions, perm)) for perm in itertools.permutations(positions)])
    elems = []
    for combo in itertools.product(*per_class):
        img = list(range(n))
        for mapping in combo:
            for src, dst in mapping.items():
                img[src] = dst
        elems.append(tuple(img))
    gen_tuples = []
    for _, positions in sorted(classes.items()):
        for x, y in zip(positions, positions[1:]):
            img = list(range(n))
            img[x], img[y] = y, x
            gen_tuples.append(tuple(img))
    ground = tuple(
        p + 1 for positions in classes.values() if len(positions) > 1 for p in positions
    )
    return PermGroup._build(
        n, elems, tuple(gen_tuples), sorted(ground) or None, b.materialization_bound
    )


def _factorial(m: int) -> int:
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# a small partition cache; closures of the same group at several k reuse it

_CACHE: OrderedDict[tuple, OrbitPartition] = OrderedDict()
_CACHE_MAX = 24


def cached_orbit_partition(
    group: PermGroup, k: int, budgets: Budgets | None = None, value_action: bool = False
) -> OrbitPartition:
    """LRU-cached orbit partition of the group.

    Coordinate action on k^degree by default; with ``value_action`` the
    partition of degree^k under the value action instead.
    """
    key = (group, k, value_action)
    hit = _CACHE.get(key)
    if hit is not None:
        _CACHE.move_to_end(key)
        return hit
    if value_action:
        part = kpow_orbit_partition(group, k, budgets=budgets)
    else:
        space = TupleSpace(group.degree, k, budgets=budgets)
        part = orbit_partition(group, space, budgets=budgets)
    _CACHE[key] = part
    while len(_CACHE) > _CACHE_MAX:
        _CACHE.popitem(last=False)
    return part


def clear_partition_cache() -> None:
    _CACHE.clear()
