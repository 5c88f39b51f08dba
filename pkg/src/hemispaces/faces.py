"""Normalized max-plus hyperplanes and their face decomposition.

A hyperplane is stored in the normalized centered form

    max(x_i : i in I) = max(x_j : j in J, alpha)    and    x_l = -inf for l in L

where ``alpha`` is either 0 or absent.  The free term is handled as one
more index, ``n + 1``, whose value is the constant 0.  Indices are 1-based
throughout.

Every point of R^n_max lies in exactly one face: a k-face, named by the set
of tied maximal terms, or one of the two extra faces.
"""
from __future__ import annotations

import enum
import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterable, Union

from .maxplus import BOTTOM, Point, Scalar, ext, sadd, segment_parameters, segment_point

FREE_TOKEN = "free"


class HyperplaneError(ValueError):
    pass


class FaceError(ValueError):
    pass


class LConstraintError(ValueError):
    """A point has a finite coordinate that the hyperplane forces to -inf."""


@dataclass(frozen=True)
class Hyperplane:
    n: int
    I: frozenset
    J: frozenset
    L: frozenset = frozenset()
    alpha: bool = True

    def __post_init__(self):
        for name in ("I", "J", "L"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if not isinstance(self.n, int) or self.n < 1:
            raise HyperplaneError(f"dimension must be a positive integer, got {self.n!r}")
        if not self.I:
            raise HyperplaneError("I must be nonempty")
        if not self.alpha and not self.J:
            raise HyperplaneError("J must be nonempty when the free term is missing")
        for name in ("I", "J", "L"):
            bad = [i for i in getattr(self, name) if not isinstance(i, int) or not 1 <= i <= self.n]
            if bad:
                raise HyperplaneError(f"{name} has indices outside [1, {self.n}]: {bad}")
        if self.I & self.J or self.I & self.L or self.J & self.L:
            raise HyperplaneError("I, J and L must be pairwise disjoint")
        # sorted term indices, cached for classify
        object.__setattr__(self, "_terms", tuple(sorted(self.I | self.J)))

    @property
    def free(self):
        """Index of the free term, or None when alpha is missing."""
        return self.n + 1 if self.alpha else None

    @property
    def jbar(self) -> frozenset:
        return self.J | {self.n + 1} if self.alpha else self.J

    @property
    def active(self) -> frozenset:
        """I ∪ Jbar: the indices a k-face may tie."""
        return self.I | self.jbar

    @property
    def free_coords(self) -> tuple:
        """Coordinates outside I ∪ J ∪ L (ignored by every face)."""
        used = self.I | self.J | self.L
        return tuple(i for i in range(1, self.n + 1) if i not in used)

    @property
    def has_type_i(self) -> bool:
        return not self.alpha

    @property
    def has_type_ii(self) -> bool:
        return bool(self.L)

    @property
    def is_centered(self) -> bool:
        """Strictly affine and nondegenerate with every variable present."""
        return self.alpha and not self.L and len(self.I | self.J) == self.n

    def term(self, p: Point, i: int) -> Scalar:
        return 0 if i == self.n + 1 else p[i - 1]

    def to_json(self) -> dict:
        return {"n": self.n, "I": sorted(self.I), "J": sorted(self.J), "L": sorted(self.L), "alpha": self.alpha}

    @classmethod
    def from_json(cls, obj) -> "Hyperplane":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise HyperplaneError("hyperplane JSON must be an object")
        unknown = set(obj) - {"n", "I", "J", "L", "alpha"}
        if unknown:
            raise HyperplaneError(f"unknown hyperplane keys: {sorted(unknown)}")
        try:
            return validate_hyperplane(obj["n"], obj["I"], obj.get("J", []), obj.get("L", []), obj.get("alpha", True))
        except KeyError as e:
            raise HyperplaneError(f"hyperplane JSON is missing {e}") from None

    def __str__(self):
        def side(idx, const):
            terms = [f"x{i}" for i in sorted(idx)] + ([const] if const else [])
            return " ⊕ ".join(terms) if terms else "-inf"

        eq = f"{side(self.I, None)} = {side(self.J, '0' if self.alpha else None)}"
        if self.L:
            eq += ", " + ", ".join(f"x{i} = -inf" for i in sorted(self.L))
        return eq


def validate_hyperplane(n, I, J=(), L=(), alpha=True) -> Hyperplane:
    """Build a :class:`Hyperplane` from raw index data, or raise HyperplaneError."""
    def indices(name, xs):
        xs = list(xs)
        if any(isinstance(i, bool) or not isinstance(i, int) for i in xs):
            raise HyperplaneError(f"{name} must contain integer indices")
        if len(set(xs)) != len(xs):
            raise HyperplaneError(f"{name} has repeated indices")
        return frozenset(xs)

    if isinstance(n, bool) or not isinstance(n, int):
        raise HyperplaneError("n must be an integer")
    if not isinstance(alpha, bool):
        raise HyperplaneError("alpha must be a boolean")
    return Hyperplane(n, indices("I", I), indices("J", J), indices("L", L), alpha)


# ----------------------------------------------------------------- face ids


@dataclass(frozen=True)
class KFace:
    """A k-face, identified by its set of tied indices (``n + 1`` = free term)."""

    indices: frozenset

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(self.indices))
        if not self.indices:
            raise FaceError("a k-face needs a nonempty index set")

    @property
    def codim(self) -> int:
        return len(self.indices) - 1

    def __repr__(self):
        return "F{" + ",".join(str(i) for i in sorted(self.indices)) + "}"


class ExtraFace(enum.Enum):
    TYPE_I = "typeI"
    TYPE_II = "typeII"

    def __repr__(self):
        return self.value


TYPE_I = ExtraFace.TYPE_I
TYPE_II = ExtraFace.TYPE_II

FaceId = Union[KFace, ExtraFace]


def face(*indices) -> KFace:
    return KFace(frozenset(indices))


def face_key(f: FaceId):
    """Canonical sort key: k-faces by size then sorted indices, then TypeI, TypeII."""
    if isinstance(f, KFace):
        return (0, len(f.indices), tuple(sorted(f.indices)))
    return (1 if f is TYPE_I else 2, 0, ())


def is_pure(H: Hyperplane, f: KFace) -> bool:
    return bool(f.indices & H.I) and bool(f.indices & H.jbar)


def face_to_json(H: Hyperplane, f: FaceId):
    if isinstance(f, ExtraFace):
        return f.value
    return {"k": [FREE_TOKEN if i == H.n + 1 else i for i in sorted(f.indices)]}


def index_from_json(H: Hyperplane, token) -> int:
    if token == FREE_TOKEN:
        if not H.alpha:
            raise FaceError("this hyperplane has no free term")
        return H.n + 1
    if isinstance(token, bool) or not isinstance(token, int):
        raise FaceError(f"bad face index {token!r}")
    return token


def face_from_json(H: Hyperplane, obj) -> FaceId:
    if isinstance(obj, str):
        for extra in ExtraFace:
            if obj == extra.value:
                return extra
        obj = json.loads(obj)
    if not isinstance(obj, dict) or set(obj) != {"k"}:
        raise FaceError(f"bad face JSON {obj!r}")
    return KFace(frozenset(index_from_json(H, t) for t in obj["k"]))


# ---------------------------------------------------------------- operations


def face_catalog(H: Hyperplane) -> list:
    """Every face of ``H`` in canonical order."""
    active = sorted(H.active)
    out = [KFace(frozenset(c)) for r in range(1, len(active) + 1) for c in itertools.combinations(active, r)]
    out.sort(key=face_key)
    if H.has_type_i:
        out.append(TYPE_I)
    if H.has_type_ii:
        out.append(TYPE_II)
    return out


def in_catalog(H: Hyperplane, f: FaceId) -> bool:
    if f is TYPE_I:
        return H.has_type_i
    if f is TYPE_II:
        return H.has_type_ii
    return isinstance(f, KFace) and f.indices <= H.active


def classify(H: Hyperplane, p: Point) -> FaceId:
    """The unique face of ``H`` containing ``p``."""
    if len(p) != H.n:
        raise ValueError(f"dimension mismatch: point has {len(p)} coordinates, hyperplane {H.n}")
    for l in H.L:
        if p[l - 1] is not BOTTOM:
            return TYPE_II
    if H.alpha:
        best, arg = 0, [H.n + 1]
    else:
        best, arg = BOTTOM, []
    for i in H._terms:
        v = p[i - 1]
        if v is BOTTOM:
            continue
        if best is BOTTOM or v > best:
            best, arg = v, [i]
        elif v == best:
            arg.append(i)
    if not arg:
        return TYPE_I
    return KFace(frozenset(arg))


def satisfies(H: Hyperplane, f: FaceId, p: Point) -> bool:
    """Check the defining conditions of face ``f`` at ``p`` literally.

    Independent of :func:`classify`; used to re-verify it.
    """
    if f is TYPE_II:
        return any(p[l - 1] is not BOTTOM for l in H.L)
    if f is TYPE_I:
        return all(p[i - 1] is BOTTOM for i in H.I | H.J | H.L)
    K = f.indices
    vals = {i: H.term(p, i) for i in H.active}
    for i1 in K:
        for i2 in K:
            if vals[i1] is BOTTOM or vals[i1] != vals[i2]:
                return False
    for k in H.active - K:
        for i in K:
            if not vals[k] < vals[i]:
                return False
    return all(p[l - 1] is BOTTOM for l in H.L)


def representative(H: Hyperplane, f: FaceId) -> Point:
    """A deterministic witness point of face ``f``."""
    if not in_catalog(H, f):
        raise FaceError(f"{f!r} is not a face of {H}")
    coords = [0] * H.n
    if f is TYPE_I:
        for i in H.I | H.J | H.L:
            coords[i - 1] = BOTTOM
    elif f is TYPE_II:
        for i in H.I | H.J:
            coords[i - 1] = BOTTOM
    else:
        K = f.indices
        hi, lo = (0, -1) if H.n + 1 in K else (1, 0)
        for i in H.I | H.J:
            coords[i - 1] = hi if i in K else lo
        for l in H.L:
            coords[l - 1] = BOTTOM
    return tuple(coords)


def boundary_subface(H: Hyperplane, f1: FaceId, f2: FaceId) -> KFace:
    """Bd(F1, F2): the k-face indexed by the union of both index sets."""
    if not (isinstance(f1, KFace) and isinstance(f2, KFace)):
        raise FaceError("boundary subfaces are defined for k-faces only")
    if not (in_catalog(H, f1) and in_catalog(H, f2)):
        raise FaceError("faces do not belong to this hyperplane")
    return KFace(f1.indices | f2.indices)


class Side(enum.Enum):
    BELOW = "below"
    ABOVE = "above"
    BOUNDARY = "boundary"


def side_of(H: Hyperplane, p: Point) -> Side:
    """Compare ``max_I x_i`` with ``max_J x_j ⊕ alpha`` at ``p``."""
    if len(p) != H.n:
        raise ValueError("dimension mismatch")
    if any(p[l - 1] is not BOTTOM for l in H.L):
        raise LConstraintError(f"point has a finite coordinate in L = {sorted(H.L)}")
    lhs = max((p[i - 1] for i in H.I), default=BOTTOM)
    rhs = max([p[j - 1] for j in H.J] + ([0] if H.alpha else []), default=BOTTOM)
    if lhs == rhs:
        return Side.BOUNDARY
    return Side.ABOVE if lhs > rhs else Side.BELOW


def segment_face_trace(H: Hyperplane, x: Point, y: Point) -> list:
    """Faces met along ``[x, y]`` walking from ``x`` to ``y``, consecutive repeats merged."""
    if len(x) != H.n or len(y) != H.n:
        raise ValueError("dimension mismatch")
    out = []
    for prm in reversed(segment_parameters(x, y)):
        f = classify(H, segment_point(x, y, prm))
        if not out or out[-1] != f:
            out.append(f)
    return out


def face_conditions(H: Hyperplane, f: FaceId) -> list:
    """Human-readable defining conditions of ``f``."""
    def name(i):
        return "0" if i == H.n + 1 else f"x{i}"

    if f is TYPE_I:
        return [f"x{i} = -inf" for i in sorted(H.I | H.J | H.L)]
    if f is TYPE_II:
        L = [f"x{i}" for i in sorted(H.L)]
        return [(L[0] if len(L) == 1 else "max(" + ", ".join(L) + ")") + " > -inf"]
    K = sorted(f.indices)
    tie = " = ".join(name(i) for i in K)
    if H.n + 1 not in f.indices:
        out = [tie + " > -inf"]
    else:
        out = [tie] if len(K) > 1 else []
    lead = name(K[-1]) if H.n + 1 in f.indices else name(K[0])
    out += [f"{name(k)} < {lead}" for k in sorted(H.active - f.indices)]
    out += [f"x{l} = -inf" for l in sorted(H.L)]
    return out


# ------------------------------------------------------------------ sampling


def random_scalar(rng: random.Random, below=None, p_bottom: float = 0.15) -> Scalar:
    """A random exact scalar, strictly below ``below`` when given.

    Values are integers or halves so ties occur often enough to matter.
    """
    if rng.random() < p_bottom:
        return BOTTOM
    if below is None:
        return ext(rng.randint(-12, 12) * ext("1/2"))
    if below is BOTTOM:
        return BOTTOM
    return sadd(below, -ext(rng.randint(1, 10) * ext("1/2")))


def sample_face_point(H: Hyperplane, f: FaceId, rng: random.Random) -> Point:
    """A random point of face ``f`` (a perturbed representative)."""
    if not in_catalog(H, f):
        raise FaceError(f"{f!r} is not a face of {H}")
    coords = [random_scalar(rng) for _ in range(H.n)]
    if f is TYPE_I:
        for i in H.I | H.J | H.L:
            coords[i - 1] = BOTTOM
    elif f is TYPE_II:
        L = sorted(H.L)
        for l in L:
            coords[l - 1] = random_scalar(rng, p_bottom=0.5)
        coords[rng.choice(L) - 1] = random_scalar(rng, p_bottom=0.0)
    else:
        K = f.indices
        if H.n + 1 in K:
            tie = 0
        elif H.alpha:
            tie = ext(rng.randint(1, 12) * ext("1/2"))
        else:
            tie = random_scalar(rng, p_bottom=0.0)
        for i in H.I | H.J:
            coords[i - 1] = tie if i in K else random_scalar(rng, below=tie, p_bottom=0.2)
        for l in H.L:
            coords[l - 1] = BOTTOM
    return tuple(coords)


def grid_points(n: int, values: Iterable = (BOTTOM, -2, -1, 0, 1, 2)):
    """All points of ``values^n`` in lexicographic order."""
    return itertools.product(tuple(values), repeat=n)
