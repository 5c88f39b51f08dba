"""Exact max-plus arithmetic over R_max = Q ∪ {-inf}.

Scalars are Python ``int`` / :class:`fractions.Fraction` values, plus the
singleton :data:`BOTTOM` standing for -inf.  Points are plain tuples of
scalars.  Nothing here ever touches floating point: face classification
depends on exact ties between coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence, Union


class _Bottom:
    """The additive zero of the max-plus semifield (-inf)."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return "BOTTOM"

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__


BOTTOM = _Bottom()

Scalar = Union[int, Fraction, _Bottom]
Point = tuple


def ext(value) -> Scalar:
    """Coerce ``value`` to an exact extended scalar.

    Accepts ints, Fractions, :data:`BOTTOM`, and strings such as ``"3"``,
    ``"-3/2"`` or ``"-inf"``.  Integral fractions collapse to ``int``.
    """
    if value is BOTTOM:
        return BOTTOM
    if isinstance(value, bool):
        raise TypeError("booleans are not max-plus scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        token = value.strip()
        if token.lower() in ("-inf", "-infinity", "bottom"):
            return BOTTOM
        try:
            return ext(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational or -inf: {value!r}") from None
    raise TypeError(f"unsupported scalar type {type(value).__name__}; floats are not allowed")


def point(*coords) -> Point:
    """Build a point; ``point(1, "-inf", "3/2")`` or ``point([1, 2])``."""
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction, _Bottom)):
        coords = tuple(coords[0])
    if not coords:
        raise ValueError("a point needs at least one coordinate")
    return tuple(ext(c) for c in coords)


def parse_point(text: str) -> Point:
    """Parse the comma-separated text format, e.g. ``1,-inf,3/2``."""
    tokens = [t for t in text.split(",")]
    if not text.strip() or any(not t.strip() for t in tokens):
        raise ValueError(f"malformed point text: {text!r}")
    return tuple(ext(t) for t in tokens)


def format_scalar(value: Scalar) -> str:
    return "-inf" if value is BOTTOM else str(value)


def format_point(p: Sequence[Scalar]) -> str:
    return ",".join(format_scalar(c) for c in p)


def _check_dims(x, y):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} != {len(y)}")


def smax(a: Scalar, b: Scalar) -> Scalar:
    if a is BOTTOM:
        return b
    if b is BOTTOM:
        return a
    return a if a >= b else b


def sadd(a: Scalar, b: Scalar) -> Scalar:
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    s = a + b
    if isinstance(s, Fraction) and s.denominator == 1:
        return s.numerator
    return s


def oplus(x: Point, y: Point) -> Point:
    """Coordinatewise maximum."""
    _check_dims(x, y)
    return tuple(smax(a, b) for a, b in zip(x, y))


def scale(lam: Scalar, x: Point) -> Point:
    """``lam ⊗ x``: add ``lam`` to every coordinate (BOTTOM absorbs)."""
    if len(x) == 0:
        raise ValueError("cannot scale a 0-dimensional point")
    return tuple(sadd(lam, c) for c in x)


class SegmentParam(NamedTuple):
    """Coefficients ``(alpha, beta)`` of a segment point, ``max(alpha, beta) == 0``."""

    alpha: Scalar
    beta: Scalar


def segment_param(alpha, beta) -> SegmentParam:
    alpha, beta = ext(alpha), ext(beta)
    if smax(alpha, beta) != 0:
        raise ValueError(f"segment parameter needs max(alpha, beta) = 0, got ({alpha!r}, {beta!r})")
    return SegmentParam(alpha, beta)


def segment_point(x: Point, y: Point, p: SegmentParam) -> Point:
    """The point ``alpha ⊗ x ⊕ beta ⊗ y`` of the segment ``[x, y]``."""
    _check_dims(x, y)
    alpha, beta = p
    if smax(alpha, beta) != 0:
        raise ValueError(f"segment parameter needs max(alpha, beta) = 0, got {tuple(p)!r}")
    return tuple(smax(sadd(alpha, a), sadd(beta, b)) for a, b in zip(x, y))


def _arc_breaks(u: Point, v: Point) -> list:
    # values t in (-inf, 0) where t + u_i meets v_j or the constant 0
    out = set()
    for a in u:
        if a is BOTTOM:
            continue
        if -a < 0:
            out.add(ext(-a))
        for b in v:
            if b is not BOTTOM and b - a < 0:
                out.add(ext(b - a))
    return sorted(out)


def order_pattern(z: Point) -> tuple:
    """Order/equality pattern of the coordinates of ``z`` and the constant 0."""
    vals = list(z) + [0]
    return tuple((a < b, a == b) for k, a in enumerate(vals) for b in vals[k + 1:])


def _candidates(x: Point, y: Point) -> list[SegmentParam]:
    first = [SegmentParam(BOTTOM, 0)] + [SegmentParam(a, 0) for a in _arc_breaks(x, y)]
    second = [SegmentParam(0, b) for b in reversed(_arc_breaks(y, x))] + [SegmentParam(0, BOTTOM)]
    return first + [SegmentParam(0, 0)] + second


def segment_breakpoints(x: Point, y: Point) -> list[SegmentParam]:
    """Parameters at which the order pattern along ``[x, y]`` changes.

    Canonical order: the ``beta = 0`` arc with ``alpha`` rising from
    BOTTOM (the point ``y``) to 0, then the ``alpha = 0`` arc with ``beta``
    falling from 0 to BOTTOM (the point ``x``).  Both endpoints and the
    midpoint ``(0, 0)`` are always present.  Between two consecutive
    entries the order/equality pattern of the coordinates, compared with
    each other and with 0, is constant.
    """
    _check_dims(x, y)
    cands = _candidates(x, y)
    gaps = [order_pattern(segment_point(x, y, m)) for m in _gap_params(cands)]
    out = []
    for k, c in enumerate(cands):
        if k in (0, len(cands) - 1) or c == (0, 0):
            out.append(c)
            continue
        here = order_pattern(segment_point(x, y, c))
        if here != gaps[k - 1] or here != gaps[k]:
            out.append(c)
    return out


def _between(a: Scalar, b: Scalar) -> Scalar:
    if a is BOTTOM:
        return sadd(b, -1)
    if b is BOTTOM:
        return sadd(a, -1)
    s = a + b
    if isinstance(s, int) and s % 2 == 0:
        return s // 2
    return ext(Fraction(s) / 2)


def _gap_params(bps: list[SegmentParam]) -> list[SegmentParam]:
    out = []
    for prev, nxt in zip(bps, bps[1:]):
        if prev.beta == 0 and nxt.beta == 0:
            out.append(SegmentParam(_between(prev.alpha, nxt.alpha), 0))
        else:
            out.append(SegmentParam(0, _between(prev.beta, nxt.beta)))
    return out


def segment_parameters(x: Point, y: Point) -> list[SegmentParam]:
    """Breakpoints interleaved with one interior parameter per gap.

    Evaluating a pattern-determined predicate at these parameters decides
    it on the whole segment.
    """
    bps = segment_breakpoints(x, y)
    out = [bps[0]]
    for mid, nxt in zip(_gap_params(bps), bps[1:]):
        out += [mid, nxt]
    return out
