from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hemispaces.maxplus import (
    BOTTOM,
    SegmentParam,
    ext,
    format_point,
    oplus,
    parse_point,
    point,
    scale,
    segment_breakpoints,
    segment_param,
    segment_parameters,
    segment_point,
)

finite = st.builds(lambda p, q: ext(Fraction(p, q)), st.integers(-8, 8), st.sampled_from([1, 1, 2, 3]))
scalar = st.one_of(st.just(BOTTOM), finite, finite)


def points(n):
    return st.tuples(*[scalar] * n)


def test_bottom_ordering():
    assert BOTTOM < -(10**9) < 0
    assert not BOTTOM > Fraction(-7, 3)
    assert BOTTOM == BOTTOM and BOTTOM <= BOTTOM and BOTTOM >= BOTTOM
    assert max([BOTTOM, -3, Fraction(1, 2)]) == Fraction(1, 2)
    assert BOTTOM + 5 is BOTTOM and 5 + BOTTOM is BOTTOM


def test_ext_parsing():
    assert ext("3/2") == Fraction(3, 2)
    assert ext("4/2") == 2 and isinstance(ext("4/2"), int)
    assert ext("-inf") is BOTTOM
    with pytest.raises(TypeError):
        ext(1.5)
    with pytest.raises(ValueError):
        ext("abc")


def test_point_text_roundtrip():
    p = parse_point("1,-inf,3/2")
    assert p == (1, BOTTOM, Fraction(3, 2))
    assert format_point(p) == "1,-inf,3/2"
    for bad in ["", "1,,2", "1,x"]:
        with pytest.raises(ValueError):
            parse_point(bad)


def test_oplus_examples():
    assert oplus(point(1, "-inf"), point(0, 2)) == (1, 2)
    x = point(3, "-1/2")
    assert oplus(x, x) == x
    assert oplus(point("-inf", "-inf"), point(3, -1)) == (3, -1)
    with pytest.raises(ValueError):
        oplus(point(1), point(1, 2))


def test_scale_examples():
    assert scale(3, point(1, 2)) == (4, 5)
    assert scale(0, point(1, "-inf")) == (1, BOTTOM)
    assert scale(BOTTOM, point(1, 2)) == (BOTTOM, BOTTOM)
    with pytest.raises(ValueError):
        scale(1, ())


def test_segment_point_examples():
    x, y = point(2, "-inf"), point("-inf", 3)
    assert segment_point(x, y, segment_param(0, -2)) == (2, 1)
    assert segment_point(x, y, segment_param(0, BOTTOM)) == x
    assert segment_point(x, y, segment_param(BOTTOM, 0)) == y
    with pytest.raises(ValueError):
        segment_param(-1, -1)
    with pytest.raises(ValueError):
        segment_point(x, y, SegmentParam(1, 0))


def test_breakpoint_examples():
    bps = segment_breakpoints(point(2, "-inf"), point("-inf", 3))
    assert SegmentParam(0, -1) in bps
    assert bps == [SegmentParam(BOTTOM, 0), SegmentParam(-2, 0), SegmentParam(0, 0),
                   SegmentParam(0, -1), SegmentParam(0, -3), SegmentParam(0, BOTTOM)]
    x = point(1, "-2/3")
    assert segment_breakpoints(x, x) == [SegmentParam(BOTTOM, 0), SegmentParam(0, 0), SegmentParam(0, BOTTOM)]
    assert SegmentParam(0, -5) in segment_breakpoints(point(0), point(5))


def pattern(z):
    # order/equality pattern of coordinates among themselves and against 0
    vals = list(z) + [0]
    return tuple((a < b, a == b) for a in vals for b in vals)


def _dense_params(step=Fraction(1, 6), lo=-30):
    # independent oracle: a fine walk over both arcs
    out = [SegmentParam(BOTTOM, 0)]
    a = Fraction(lo)
    while a < 0:
        out.append(SegmentParam(ext(a), 0))
        a += step
    out.append(SegmentParam(0, 0))
    b = -step
    while b >= lo:
        out.append(SegmentParam(0, ext(b)))
        b -= step
    out.append(SegmentParam(0, BOTTOM))
    return out


def _position(prm):
    # position along the canonical walk from y (BOTTOM, 0) to x (0, BOTTOM)
    if prm.beta == 0:
        return (0, prm.alpha)
    return (1, -prm.beta if prm.beta is not BOTTOM else float("inf"))


def _key(prm):
    arc, t = _position(prm)
    if t is BOTTOM:
        return (arc, float("-inf"))
    return (arc, float(t))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(points(n), points(n))))
def test_breakpoints_catch_every_pattern_change(xy):
    x, y = xy
    bps = segment_breakpoints(x, y)
    keys = [_key(p) for p in bps]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert bps[0] == (BOTTOM, 0) and bps[-1] == (0, BOTTOM) and SegmentParam(0, 0) in bps
    dense = _dense_params()
    pats = [pattern(segment_point(x, y, p)) for p in dense]
    for k in range(len(dense) - 1):
        if pats[k] != pats[k + 1]:
            lo, hi = _key(dense[k]), _key(dense[k + 1])
            assert any(lo <= kk <= hi for kk in keys), (dense[k], dense[k + 1])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(points(n), points(n))))
def test_pattern_constant_inside_gaps(xy):
    x, y = xy
    prms = segment_parameters(x, y)
    bps = set(segment_breakpoints(x, y))
    assert len(prms) == 2 * len(bps) - 1
    for k in range(1, len(prms), 2):
        inner = prms[k]
        assert inner not in bps
        assert _key(prms[k - 1]) < _key(inner) < _key(prms[k + 1])
        # a second interior parameter in the same gap gives the same pattern
        lo, hi = prms[k - 1], prms[k + 1]
        if lo.beta == 0 and hi.beta == 0:
            other = SegmentParam(ext(inner.alpha - Fraction(1, 1000)) if lo.alpha is BOTTOM
                                 else ext(Fraction(lo.alpha + inner.alpha) / 2), 0)
        else:
            other = SegmentParam(0, ext(inner.beta - Fraction(1, 1000)) if hi.beta is BOTTOM
                                 else ext(Fraction(hi.beta + inner.beta) / 2))
        assert pattern(segment_point(x, y, inner)) == pattern(segment_point(x, y, other))


@given(points(3), points(3), points(3))
def test_oplus_laws(x, y, z):
    assert oplus(x, y) == oplus(y, x)
    assert oplus(oplus(x, y), z) == oplus(x, oplus(y, z))
    assert oplus(x, x) == x


@given(finite, points(3), points(3))
def test_scale_distributes(lam, x, y):
    assert scale(lam, oplus(x, y)) == oplus(scale(lam, x), scale(lam, y))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(points(n), points(n))))
def test_segment_endpoints(xy):
    x, y = xy
    assert segment_point(x, y, SegmentParam(0, BOTTOM)) == x
    assert segment_point(x, y, SegmentParam(BOTTOM, 0)) == y
