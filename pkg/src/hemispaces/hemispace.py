"""Hemispaces assembled from the faces of a hyperplane.

A pair of complementary hemispaces related to a hyperplane is fixed by

* a split of the k-face index sets into two union-closed families,
* a convex 2-partition of the type-I face (if present), and
* the owner of the type-II face (if present).

The type-I face is isomorphic to R^d_max over the coordinates the
hyperplane ignores, so its split is itself a hemispace in that smaller
space (or "all to one side").
"""
from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Optional, Union

from .faces import (
    FREE_TOKEN,
    TYPE_I,
    TYPE_II,
    Hyperplane,
    KFace,
    classify,
    face_catalog,
    grid_points,
    index_from_json,
    random_scalar,
    sample_face_point,
)
from .maxplus import BOTTOM, Point, format_point, format_scalar, segment_parameters, segment_point


class PartitionError(ValueError):
    """Invalid face partition; ``witness`` names the offending sets when known."""

    def __init__(self, msg, witness=None):
        super().__init__(msg)
        self.witness = witness


class AssemblyError(ValueError):
    pass


class TypeISplit(enum.Enum):
    ALL_TO_FIRST = "first"
    ALL_TO_SECOND = "second"


def _sorted_sets(sets: Iterable[frozenset]) -> list:
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def all_index_sets(H: Hyperplane) -> frozenset:
    return frozenset(f.indices for f in face_catalog(H) if isinstance(f, KFace))


def union_closure_witness(family: frozenset):
    """First pair ``(S, T)`` of ``family`` whose union is missing, else None."""
    members = _sorted_sets(family)
    for a, S in enumerate(members):
        for T in members[a + 1:]:
            if S | T not in family:
                return (S, T)
    return None


@dataclass(frozen=True)
class FacePartition:
    hyperplane: Hyperplane
    first: frozenset
    second: frozenset

    def side_of(self, K: frozenset) -> int:
        return 0 if K in self.first else 1

    def sides(self):
        return (self.first, self.second)


def validate_partition(H: Hyperplane, K1: Iterable, K2: Iterable) -> FacePartition:
    """Check the union-closed split criterion and return the partition."""
    K1 = frozenset(frozenset(s) for s in K1)
    K2 = frozenset(frozenset(s) for s in K2)
    universe = all_index_sets(H)
    stray = [s for s in K1 | K2 if s not in universe]
    if stray:
        raise PartitionError(f"not index sets of k-faces: {[sorted(s) for s in _sorted_sets(stray)]}")
    if K1 & K2:
        raise PartitionError("sides overlap", witness=_sorted_sets(K1 & K2)[0])
    missing = universe - K1 - K2
    if missing:
        raise PartitionError("sides do not cover every k-face", witness=_sorted_sets(missing)[0])
    for side in (K1, K2):
        w = union_closure_witness(side)
        if w is not None:
            raise PartitionError(f"not closed under union: {sorted(w[0])} ∪ {sorted(w[1])}", witness=w)
    if K1 and K2:
        def owner(i):
            return 0 if frozenset([i]) in K1 else 1

        i_sides = {owner(i) for i in H.I}
        j_sides = {owner(j) for j in H.jbar}
        if len(i_sides) > 1 or len(j_sides) > 1 or i_sides == j_sides:
            raise PartitionError("singletons of I and of Jbar must sit on opposite sides")
    return FacePartition(H, K1, K2)


TypeIPart = Union[bool, "Hemispace", None]


@dataclass(frozen=True)
class Hemispace:
    """One member of a complementary pair.

    ``type_i`` describes the owned part of the type-I face: True (all of
    it), False (none), or a Hemispace over the coordinates the hyperplane
    ignores.  ``type_ii`` says whether the type-II face is owned.  Both
    are None when the face does not exist.
    """

    partition: FacePartition
    side: int
    type_i: TypeIPart = None
    type_ii: Optional[bool] = None

    def __post_init__(self):
        H = self.partition.hyperplane
        if self.side not in (0, 1):
            raise AssemblyError("side must be 0 or 1")
        if H.has_type_i != (self.type_i is not None):
            raise AssemblyError("type-I assignment must be given exactly when the type-I face exists")
        if H.has_type_ii != (self.type_ii is not None):
            raise AssemblyError("type-II assignment must be given exactly when the type-II face exists")
        if isinstance(self.type_i, Hemispace):
            d = len(H.free_coords)
            if self.type_i.hyperplane.n != d:
                raise AssemblyError(f"type-I split lives in dimension {d}, got {self.type_i.hyperplane.n}")

    @property
    def hyperplane(self) -> Hyperplane:
        return self.partition.hyperplane

    @property
    def owns(self) -> frozenset:
        return self.partition.sides()[self.side]

    def __contains__(self, p: Point) -> bool:
        return contains(self, p)

    def to_json(self) -> dict:
        H = self.hyperplane
        out = {
            "hyperplane": H.to_json(),
            "owns": [[FREE_TOKEN if i == H.n + 1 else i for i in sorted(s)] for s in _sorted_sets(self.owns)],
        }
        if self.type_i is not None:
            if isinstance(self.type_i, Hemispace):
                out["typeI"] = self.type_i.to_json()
            else:
                out["typeI"] = "first" if self.type_i else "second"
        if self.type_ii is not None:
            out["typeII"] = self.type_ii
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "Hemispace":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or "hyperplane" not in obj or "owns" not in obj:
            raise PartitionError("hemispace JSON needs 'hyperplane' and 'owns'")
        H = Hyperplane.from_json(obj["hyperplane"])
        owns = frozenset(frozenset(index_from_json(H, t) for t in s) for s in obj["owns"])
        part = validate_partition(H, owns, all_index_sets(H) - owns)
        type_i = obj.get("typeI")
        if isinstance(type_i, dict):
            type_i = cls.from_json(type_i)
        elif type_i is not None:
            if type_i not in ("first", "second"):
                raise AssemblyError(f"bad typeI value {type_i!r}")
            type_i = type_i == "first"
        type_ii = obj.get("typeII")
        if type_ii is not None and not isinstance(type_ii, bool):
            raise AssemblyError("typeII must be a boolean")
        return cls(part, 0, type_i, type_ii)


class HemispacePair(NamedTuple):
    first: Hemispace
    second: Hemispace


def assemble(H: Hyperplane, part: FacePartition, side: int = 0, t1=None, t2: Optional[bool] = None) -> HemispacePair:
    """Build the complementary pair of faces ``part.sides()[side]`` vs the rest.

    ``t1`` splits the type-I face: a :class:`TypeISplit`, or a Hemispace
    over the ignored coordinates giving the first member's share.  ``t2``
    is True when the first member owns the type-II face.
    """
    if part.hyperplane != H:
        raise AssemblyError("partition belongs to another hyperplane")
    if H.has_type_i and t1 is None:
        raise AssemblyError("a type-I split is required for this hyperplane")
    if not H.has_type_i and t1 is not None:
        raise AssemblyError("this hyperplane has no type-I face")
    if H.has_type_ii and t2 is None:
        raise AssemblyError("a type-II owner is required for this hyperplane")
    if not H.has_type_ii and t2 is not None:
        raise AssemblyError("this hyperplane has no type-II face")
    if t1 is None:
        first_i = None
    elif isinstance(t1, TypeISplit):
        first_i = t1 is TypeISplit.ALL_TO_FIRST
    elif isinstance(t1, Hemispace):
        first_i = t1
    else:
        raise AssemblyError(f"bad type-I split {t1!r}")
    first = Hemispace(part, side, first_i, t2)
    return HemispacePair(first, complement(first))


def contains(hm: Hemispace, p: Point) -> bool:
    H = hm.hyperplane
    f = classify(H, p)
    if f is TYPE_II:
        return hm.type_ii
    if f is TYPE_I:
        if isinstance(hm.type_i, Hemispace):
            return contains(hm.type_i, tuple(p[d - 1] for d in H.free_coords))
        return hm.type_i
    return f.indices in hm.owns


def complement(hm: Hemispace) -> Hemispace:
    t1 = hm.type_i
    if isinstance(t1, Hemispace):
        t1 = complement(t1)
    elif t1 is not None:
        t1 = not t1
    t2 = None if hm.type_ii is None else not hm.type_ii
    return Hemispace(hm.partition, 1 - hm.side, t1, t2)


def whole_space(H: Hyperplane) -> Hemispace:
    part = FacePartition(H, frozenset(), all_index_sets(H))
    return Hemispace(part, 1, True if H.has_type_i else None, True if H.has_type_ii else None)


def empty_set(H: Hyperplane) -> Hemispace:
    return complement(whole_space(H))


# ---------------------------------------------------------- convexity oracle


@dataclass
class ConvexityReport:
    passed: bool
    pairs_checked: int
    draws: int
    counterexample: Optional[dict] = None

    def to_json(self) -> dict:
        return {"pass": self.passed, "pairs": self.pairs_checked, "draws": self.draws,
                "counterexample": self.counterexample}


def trial_rng(seed: int, trial: int) -> random.Random:
    # per-trial streams keep results independent of evaluation order
    return random.Random(seed * 1_000_003 + trial)


def convexity_check(
    member: Callable[[Point], bool],
    dim: int,
    sampler: Callable[[random.Random], Point],
    trials: int = 500,
    seed: int = 0,
    max_draws: Optional[int] = None,
) -> ConvexityReport:
    """Sampled test that ``member`` describes a max-plus convex set.

    Draws point pairs until ``trials`` pairs with both endpoints inside
    have been checked (or ``max_draws`` pairs were drawn).  Each kept
    segment is checked at every breakpoint and one point per gap, which is
    exact for sets that are unions of faces.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if max_draws is None:
        max_draws = 50 * trials
    checked = draws = 0
    while checked < trials and draws < max_draws:
        rng = trial_rng(seed, draws)
        draws += 1
        x, y = sampler(rng), sampler(rng)
        if len(x) != dim or len(y) != dim:
            raise ValueError("sampler returned a point of the wrong dimension")
        if not (member(x) and member(y)):
            continue
        checked += 1
        for prm in segment_parameters(x, y):
            z = segment_point(x, y, prm)
            if not member(z):
                return ConvexityReport(False, checked, draws, {
                    "x": format_point(x), "y": format_point(y),
                    "param": [format_scalar(prm.alpha), format_scalar(prm.beta)],
                    "point": format_point(z),
                })
    return ConvexityReport(True, checked, draws)


def face_sampler(H: Hyperplane, faces=None, p_grid: float = 0.2, grid=(BOTTOM, -2, -1, 0, 1, 2)):
    """Sampler mixing random points of ``faces`` (default: all) with grid points."""
    faces = list(face_catalog(H) if faces is None else faces)
    grid = tuple(grid)

    def sample(rng: random.Random) -> Point:
        if not faces or rng.random() < p_grid:
            return tuple(rng.choice(grid) for _ in range(H.n))
        return sample_face_point(H, rng.choice(faces), rng)

    return sample


def hemispace_sampler(hm: Hemispace, p_grid: float = 0.2):
    """Sampler concentrated on the faces ``hm`` touches."""
    H = hm.hyperplane
    faces = [KFace(s) for s in _sorted_sets(hm.owns)]
    if hm.type_i:
        faces.append(TYPE_I)
    if hm.type_ii:
        faces.append(TYPE_II)
    return face_sampler(H, faces, p_grid)


def check_hemispace(hm: Hemispace, trials: int = 500, seed: int = 0) -> ConvexityReport:
    return convexity_check(lambda p: contains(hm, p), hm.hyperplane.n, hemispace_sampler(hm), trials, seed)


def signature(hm: Hemispace, grid=(BOTTOM, -2, -1, 0, 1, 2)) -> str:
    """Membership bits over ``grid^n`` in lexicographic point order."""
    grid = tuple(grid)
    if not grid:
        raise ValueError("grid must be nonempty")
    return "".join("1" if contains(hm, p) else "0" for p in grid_points(hm.hyperplane.n, grid))


__all__ = [
    "AssemblyError", "ConvexityReport", "FacePartition", "Hemispace", "HemispacePair",
    "PartitionError", "TypeISplit", "all_index_sets", "assemble", "check_hemispace",
    "complement", "contains", "convexity_check", "empty_set", "face_sampler",
    "hemispace_sampler", "random_scalar", "signature", "union_closure_witness",
    "validate_partition", "whole_space",
]
