from fractions import Fraction as F

import pytest

from exclusionlab import Hole1D, Hole2D, Rect, hole1d_from_intervals, hole2d_from_rects


def test_hole1d_basic():
    h, warnings = hole1d_from_intervals([(F(1, 4), F(1, 2))])
    assert warnings == []
    assert h.interval_count == 1
    assert h.contains(F(3, 8))
    assert not h.contains(F(1, 4))
    assert h.contains(F(1, 4), closed=True)
    assert not h.contains(F(3, 4))


def test_hole1d_wrap():
    # lo > hi wraps through 0
    h, _ = hole1d_from_intervals([(F(7, 8), F(1, 8))])
    assert h.contains(F(0))
    assert h.contains(F(15, 16))
    assert h.contains(F(1, 16))
    assert not h.contains(F(1, 2))
    assert set(h.boundary()) == {F(7, 8), F(1, 8)}


def test_hole1d_merge_warning():
    h, warnings = hole1d_from_intervals([(F(0), F(1, 4)), (F(1, 8), F(1, 2))])
    assert h.interval_count == 1
    assert warnings == ["merged overlapping or touching hole intervals"]
    # touching closures also merge
    h, warnings = hole1d_from_intervals([(F(0), F(1, 4)), (F(1, 4), F(1, 2))])
    assert h.interval_count == 1
    assert len(warnings) == 1


def test_hole1d_rejects_empty_interval():
    with pytest.raises(ValueError):
        hole1d_from_intervals([(F(1, 4), F(1, 4))])


def test_hole1d_full_circle():
    h, warnings = hole1d_from_intervals([(F(0), F(1))])
    assert h.arcs == ((F(0), F(1)),)
    h, warnings = hole1d_from_intervals([(F(0), F(2, 3)), (F(1, 2), F(1, 8))])
    assert h.arcs == ((F(0), F(1)),)
    assert "hole closure covers the whole circle" in warnings


def test_hole1d_complement_region():
    h, _ = hole1d_from_intervals([(F(7, 8), F(1, 8))])
    region = h.complement_region()
    assert [b.x for b in region] == [(F(1, 8), F(7, 8))]
    assert Hole1D(()).complement_region()[0].x == (F(0), F(1))


def test_hole1d_gaps():
    h, _ = hole1d_from_intervals([(F(1, 8), F(1, 4)), (F(1, 2), F(5, 8))])
    gaps = h.gaps()
    assert (F(1, 4), F(1, 2)) in gaps
    # the wrap gap runs past 1
    assert (F(5, 8), F(9, 8)) in gaps


def test_rect_validation():
    with pytest.raises(ValueError):
        Rect((F(1, 2), F(1, 2)), (F(0), F(1)))
    with pytest.raises(ValueError):
        Rect((F(0), F(1, 2)), (F(0), F(1, 2)), full_height=True)
    r = Rect((F(0), F(1, 2)), (F(0), F(1)), full_height=True)
    assert r.full_height


def test_rect_contains():
    r = Rect((F(1, 4), F(1, 2)), (F(1, 4), F(1, 2)))
    assert r.contains(F(3, 8), F(3, 8))
    assert not r.contains(F(1, 4), F(3, 8))
    assert r.contains(F(1, 4), F(3, 8), closed=True)
    fh = Rect((F(1, 4), F(1, 2)), (F(0), F(1)), full_height=True)
    # full-height ignores y entirely
    assert fh.contains(F(3, 8), F(0))
    assert fh.contains(F(3, 8), F(1))


def test_hole2d_merge_and_trace():
    h, warnings = hole2d_from_rects(
        [
            Rect((F(0), F(1, 4)), (F(0), F(1, 2))),
            Rect((F(1, 4), F(1, 2)), (F(0), F(1, 2))),
        ]
    )
    assert len(h.rects) == 1
    assert len(warnings) == 1
    hf, _ = hole2d_from_rects([Rect((F(1, 2), F(3, 4)), (F(0), F(1)), full_height=True)])
    assert hf.all_full_height
    assert hf.x_trace() == [(F(1, 2), F(3, 4))]


def test_hole2d_rejects_non_rectangular_union():
    with pytest.raises(ValueError):
        hole2d_from_rects(
            [
                Rect((F(0), F(1, 2)), (F(0), F(1, 2))),
                Rect((F(1, 4), F(3, 4)), (F(1, 4), F(3, 4))),
            ]
        )


def test_hole2d_contains():
    h, _ = hole2d_from_rects([Rect((F(1, 4), F(1, 2)), (F(1, 4), F(1, 2)))])
    assert h.contains(F(3, 8), F(3, 8))
    assert not h.contains(F(1, 2), F(1, 2))
    assert h.contains(F(1, 2), F(1, 2), closed=True)
    assert Hole2D(()).is_empty()
