"""Exact enumeration and counting of centered hemispaces.

For a centered hyperplane in R^n_max every face is a k-face indexed by a
nonempty subset of [n + 1], so hemispaces are splittings of those subsets
into two union-closed families.  The counts are ordered Bell numbers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator

from .faces import Hyperplane, KFace, face_catalog
from .hemispace import FacePartition, Hemispace, all_index_sets, empty_set, whole_space

# value printed for f(5) in a widely copied table; the recurrence gives 4683
MISPRINTED_F5 = 4283


class EnumerationError(ValueError):
    pass


def bell_f(n: int) -> int:
    """f(0) = 1, f(n) = sum_{k=1..n} C(n+1, k) f(n-k) + 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    f = [1]
    for m in range(1, n + 1):
        f.append(sum(comb(m + 1, k) * f[m - k] for k in range(1, m + 1)) + 1)
    return f[n]


def bell_standard(m: int) -> int:
    """Ordered Bell (Fubini) number: a(0) = 1, a(m) = sum_k C(m, k) a(m-k)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    a = [1]
    for j in range(1, m + 1):
        a.append(sum(comb(j, k) * a[j - k] for k in range(1, j + 1)))
    return a[m]


def _subsets(items, min_size=1):
    items = sorted(items)
    for r in range(min_size, len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, r))


def enumerate_centered_hyperplanes(n: int) -> list:
    """All hyperplanes ``max_I x_i = max_J x_j ⊕ 0`` with I ⊔ J = [n], I nonempty."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coords = range(1, n + 1)
    return [Hyperplane(n, frozenset(coords) - J, J, frozenset(), True)
            for J in itertools.chain([frozenset()], _subsets(coords)) if len(J) < n]


def union_closed_splits(universe, forced=None) -> Iterator[tuple]:
    """All splits of ``universe`` (a family of sets) into two union-closed sides.

    ``forced`` maps some sets to side 0 or 1.  Sets are placed in
    descending size, so the union of a new set with anything already on
    its side is already placed; a clash prunes the branch immediately.
    """
    forced = forced or {}
    order = sorted(universe, key=lambda s: (-len(s), sorted(s)))
    # bitmask encoding: index sets become ints over the sorted ground elements
    ground = sorted(frozenset().union(*order)) if order else []
    bit = {x: 1 << k for k, x in enumerate(ground)}
    masks = [sum(bit[x] for x in S) for S in order]
    fixed = [forced.get(S) for S in order]
    placed = {}
    sides = ([], [])

    def fits(s, side):
        return all(placed.get(s | t, side) == side for t in sides[side])

    def rec(k):
        if k == len(order):
            yield (frozenset(order[i] for i in range(len(order)) if placed[masks[i]] == 0),
                   frozenset(order[i] for i in range(len(order)) if placed[masks[i]] == 1))
            return
        s = masks[k]
        for side in ((fixed[k],) if fixed[k] is not None else (0, 1)):
            if fits(s, side):
                placed[s] = side
                sides[side].append(s)
                yield from rec(k + 1)
                sides[side].pop()
                del placed[s]

    yield from rec(0)


def enumerate_face_partitions(H: Hyperplane) -> list:
    """Proper union-closed splits of the k-faces of ``H``.

    ``first`` holds the Jbar singletons, ``second`` the I singletons.
    """
    if H.has_type_i or H.has_type_ii:
        raise EnumerationError("enumeration needs a hyperplane with a free term and empty L")
    forced = {frozenset([j]): 0 for j in H.jbar}
    forced.update({frozenset([i]): 1 for i in H.I})
    return [FacePartition(H, k1, k2) for k1, k2 in union_closed_splits(all_index_sets(H), forced)]


def enumerate_hemispaces(n: int, hyperplanes=None) -> Iterator[Hemispace]:
    """Both members of every proper centered pair, then the empty set and whole space."""
    hyperplanes = enumerate_centered_hyperplanes(n) if hyperplanes is None else hyperplanes
    for H in hyperplanes:
        for part in enumerate_face_partitions(H):
            yield Hemispace(part, 0)
            yield Hemispace(part, 1)
    H0 = enumerate_centered_hyperplanes(n)[0]
    yield empty_set(H0)
    yield whole_space(H0)


def count_hemispaces(n: int) -> int:
    """Number of centered hemispaces in R^n_max, by enumeration."""
    proper = sum(len(enumerate_face_partitions(H)) for H in enumerate_centered_hyperplanes(n))
    return 2 * proper + 2


def count_table(n: int) -> dict:
    enumerated = count_hemispaces(n)
    formula = 2 * bell_f(n)
    return {"n": n, "enumerated": enumerated, "formula": formula, "match": enumerated == formula}


# ----------------------------------------------------- weak orders/splittings


@dataclass(frozen=True)
class WeakOrder:
    """Ranking of [m] with ties; ``layers[0]`` is the top layer."""

    layers: tuple

    def __post_init__(self):
        layers = tuple(frozenset(l) for l in self.layers)
        object.__setattr__(self, "layers", layers)
        if any(not l for l in layers):
            raise ValueError("layers must be nonempty")
        seen = frozenset().union(*layers) if layers else frozenset()
        if sum(len(l) for l in layers) != len(seen) or seen != frozenset(range(1, len(seen) + 1)):
            raise ValueError("layers must partition [m]")

    @property
    def m(self) -> int:
        return sum(len(l) for l in self.layers)

    def to_json(self):
        return [sorted(l) for l in self.layers]


@dataclass(frozen=True)
class Splitting:
    """Union-closed split of the nonempty subsets of [m]; ``C`` holds [m]."""

    C: frozenset
    rest: frozenset

    def to_json(self):
        def fmt(fam):
            return [sorted(s) for s in sorted(fam, key=lambda s: (len(s), sorted(s)))]

        return {"C": fmt(self.C), "rest": fmt(self.rest)}


def enumerate_weak_orders(m: int) -> list:
    if m < 1:
        raise ValueError("m must be >= 1")

    def rec(remaining):
        if not remaining:
            yield ()
            return
        for top in _subsets(remaining):
            for tail in rec(remaining - top):
                yield (top,) + tail

    return [WeakOrder(layers) for layers in rec(frozenset(range(1, m + 1)))]


def weak_order_to_splitting(w: WeakOrder) -> Splitting:
    """Send each subset to C exactly when the highest layer it meets has odd rank.

    Layers are ranked 1, 2, ... from the top, so [m] (which meets the top
    layer) lands in C.  Both sides are union-closed because the highest
    layer met by S ∪ T is the higher of those met by S and T.
    """
    rank = {x: r for r, layer in enumerate(w.layers, start=1) for x in layer}
    C, rest = set(), set()
    for S in _subsets(range(1, w.m + 1)):
        (C if min(rank[x] for x in S) % 2 == 1 else rest).add(S)
    return Splitting(frozenset(C), frozenset(rest))


def splitting_to_weak_order(s: Splitting) -> WeakOrder:
    """Inverse of :func:`weak_order_to_splitting`.

    The top layer is everything outside the union of the other side;
    recurse inside that union with the roles of the sides swapped.
    """
    layers = []
    mine, other = s.C, s.rest
    ground = frozenset().union(*s.C)
    while ground:
        inside = [S for S in other if S <= ground]
        top = ground - frozenset().union(*inside) if inside else ground
        layers.append(top)
        ground = ground - top
        mine, other = other, mine
    return WeakOrder(tuple(layers))


def enumerate_splittings(m: int) -> list:
    """All union-closed splittings of the nonempty subsets of [m]."""
    if m < 1:
        raise ValueError("m must be >= 1")
    universe = list(_subsets(range(1, m + 1)))
    full = frozenset(range(1, m + 1))
    return [Splitting(a, b) for a, b in union_closed_splits(universe, {full: 0})]


# ------------------------------------------------------------- n = 3 census


CENSUS_CASES = {
    (0, 0): "case1/subcase1",
    (0, 1): "case1/subcase2",
    (1, 3): "case2/subcase1",
    (1, 2): "case2/subcase2",
}


def census_key(away: frozenset, n: int) -> tuple:
    """Codimension pattern of the faces not on the origin's side.

    Counts the away faces of codimension n - 1 and, when one exists, how
    many of its codimension-(n-2) subfaces are away too.
    """
    top = [S for S in away if len(S) == n]
    if not top:
        return (0, sum(1 for S in away if len(S) == n - 1))
    (T,) = top
    return (1, sum(1 for S in away if len(S) == n - 1 and S < T))


def census(n: int = 3) -> dict:
    """Tally the origin-containing hemispaces (and their complements) by case.

    Returns counts doubled, as each origin-containing hemispace pairs with
    a complement; the whole space is paired with the empty set.
    """
    tallies = {name: 0 for name in CENSUS_CASES.values()}
    origin = frozenset(range(1, n + 2))
    groups = [frozenset()]
    for H in enumerate_centered_hyperplanes(n):
        for part in enumerate_face_partitions(H):
            groups.append(part.second if origin in part.first else part.first)
    for away in groups:
        key = census_key(away, n)
        if key not in CENSUS_CASES:
            raise EnumerationError(f"unexpected codimension pattern {key}")
        tallies[CENSUS_CASES[key]] += 2
    tallies["case1"] = tallies["case1/subcase1"] + tallies["case1/subcase2"]
    tallies["case2"] = tallies["case2/subcase1"] + tallies["case2/subcase2"]
    tallies["total"] = tallies["case1"] + tallies["case2"]
    return tallies


def all_kfaces(H: Hyperplane) -> list:
    return [f for f in face_catalog(H) if isinstance(f, KFace)]
