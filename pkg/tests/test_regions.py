from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from exclusionlab.errors import ResourceCapError
from exclusionlab.regions import (
    Box,
    box_intersect,
    canonicalize,
    interiors_meet,
    intersect_regions,
    iv_intersect,
    region_x_projection,
    subtract_open_rect,
)

fracs = st.integers(0, 16).map(lambda k: F(k, 16))


@st.composite
def ivs(draw):
    a, b = sorted((draw(fracs), draw(fracs)))
    return (a, b)


def test_box_validation():
    with pytest.raises(ValueError):
        Box((F(1), F(0)))
    assert Box((F(0), F(0))).degenerate()
    assert Box((F(0), F(1)), (F(1, 2), F(1, 2))).degenerate()


def test_iv_intersect():
    assert iv_intersect((F(0), F(1, 2)), (F(1, 4), F(1))) == (F(1, 4), F(1, 2))
    assert iv_intersect((F(0), F(1, 4)), (F(1, 2), F(1))) is None
    # touching intervals meet in a point
    assert iv_intersect((F(0), F(1, 2)), (F(1, 2), F(1))) == (F(1, 2), F(1, 2))


def test_canonicalize_merges_touching_intervals():
    got = canonicalize([Box((F(1, 2), F(1))), Box((F(0), F(1, 2)))])
    assert got == (Box((F(0), F(1))),)
    assert canonicalize([Box((F(1, 4), F(1, 4)))]) == ()


def test_canonicalize_cap():
    with pytest.raises(ResourceCapError):
        canonicalize([Box((F(0), F(1)))] * 5, cap=3)


def test_subtract_open_rect_covers_complement():
    box = Box((F(0), F(1)), (F(0), F(1)))
    pieces = subtract_open_rect(box, (F(1, 4), F(1, 2)), (F(1, 4), F(1, 2)))
    assert len(pieces) == 4
    # pieces have disjoint interiors
    for i, a in enumerate(pieces):
        for b in pieces[i + 1 :]:
            assert not interiors_meet(a, b)


def test_subtract_full_height_strip():
    box = Box((F(0), F(1)), (F(0), F(1)))
    pieces = subtract_open_rect(box, (F(1, 4), F(1, 2)), None)
    assert sorted(p.x for p in pieces) == [(F(0), F(1, 4)), (F(1, 2), F(1))]


def test_region_x_projection():
    region = (
        Box((F(0), F(1, 4)), (F(0), F(1))),
        Box((F(1, 8), F(1, 2)), (F(0), F(1, 2))),
        Box((F(3, 4), F(1)), (F(0), F(1))),
    )
    assert region_x_projection(region) == ((F(0), F(1, 2)), (F(3, 4), F(1)))


@given(ivs(), ivs(), ivs(), ivs())
def test_box_intersect_is_exact(ax, ay, bx, by):
    a, b = Box(ax, ay), Box(bx, by)
    got = box_intersect(a, b)
    # membership test on a grid agrees with the computed box
    for i in range(0, 17, 4):
        for j in range(0, 17, 4):
            p, q = F(i, 16), F(j, 16)
            inside_both = (
                ax[0] <= p <= ax[1] and ay[0] <= q <= ay[1]
                and bx[0] <= p <= bx[1] and by[0] <= q <= by[1]
            )
            inside_got = got is not None and (
                got.x[0] <= p <= got.x[1] and got.y[0] <= q <= got.y[1]
            )
            assert inside_both == inside_got


@given(st.lists(st.tuples(ivs(), ivs()), max_size=5), st.lists(st.tuples(ivs(), ivs()), max_size=5))
def test_intersect_regions_subset(a_parts, b_parts):
    a = canonicalize([Box(x, y) for x, y in a_parts])
    b = canonicalize([Box(x, y) for x, y in b_parts])
    out = intersect_regions(a, b)
    for piece in out:
        assert any(box_intersect(piece, q) == piece for q in a)
        assert any(box_intersect(piece, q) == piece for q in b)
