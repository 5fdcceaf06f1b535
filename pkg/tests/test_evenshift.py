import itertools
import random
from fractions import Fraction as F

import pytest

from exclusionlab import (
    Code,
    Hole1D,
    Hole2D,
    Rect,
    SystemSpec,
    even_language,
    hole1d_from_intervals,
    hole2d_from_rects,
    ies_even_witness,
    is_even_code,
    res_even_witness,
)
from exclusionlab.evenshift import (
    CORNER_PIGEONHOLE,
    MUST_BE_IN_HOLE,
    MUST_BE_OUTSIDE_HOLE,
)
from exclusionlab.systems import Point, orbit_summary
from exclusionlab.words import word_fraction

BAKER = SystemSpec("baker", 2)
CIRCLE = SystemSpec("circle", 2)


def brute_even_language(length):
    """Independent filter: no factor 0 1^odd 0."""
    out = set()
    for w in itertools.product((0, 1), repeat=length):
        bad = False
        i = 0
        while i < length:
            if w[i] == 1:
                j = i
                while j < length and w[j] == 1:
                    j += 1
                if i > 0 and j < length and (j - i) % 2 == 1:
                    bad = True
                i = j
            else:
                i += 1
        if not bad:
            out.add(w)
    return frozenset(out)


def test_even_language_matches_brute_force():
    for length in range(0, 10):
        assert even_language(length) == brute_even_language(length)


def test_even_language_counts_frozen():
    assert [len(even_language(L)) for L in range(1, 9)] == [2, 4, 7, 12, 20, 33, 54, 88]


def test_is_even_code():
    assert is_even_code(Code((0, 1, 1), (0,)))
    assert not is_even_code(Code((0, 1), (0,)))
    assert not is_even_code(Code((0, 1, 1, 1), (0,)))
    # leading run is cut by the edge, so any length goes
    assert is_even_code(Code((1,), (0,)))
    assert is_even_code(Code((1, 1, 1), (0,)))
    # an all-ones tail never completes its run
    assert is_even_code(Code((0,), (1,)))
    assert not is_even_code(Code((), (1, 0, 0)))
    with pytest.raises(ValueError):
        is_even_code(Code((), (2,), 3))


def revalidate_ies(hole, witness, closed):
    """Check the returned 1D witness against the hole by exact orbits."""
    p = witness.points[0]
    if witness.kind == MUST_BE_IN_HOLE:
        # a non-member point whose whole forward orbit avoids the hole
        code = Code((0,) + (1,) * (2 * witness.index + 1), (0,))
        assert not is_even_code(code)
        assert p.x == code.value()
        summary = orbit_summary(CIRCLE, Point(p.x))
        assert all(not hole.contains(q.x, closed=closed) for q in summary.states)
    else:
        assert witness.kind == MUST_BE_OUTSIDE_HOLE
        # a member-coded orbit point that the hole swallows
        assert hole.contains(p.x, closed=closed)
        pre = tuple(int(ch) for ch in p.code.split("(")[0])
        per = tuple(int(ch) for ch in p.code.split("(")[1].rstrip(")"))
        code = Code(pre, per)
        assert is_even_code(code)
        assert code.value() == p.x


def test_ies_witness_frozen_examples():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(5, 16))])
    w = ies_even_witness(hole)
    assert (w.kind, w.index) == (MUST_BE_IN_HOLE, 0)
    assert w.points[0].x == F(1, 4)

    hole, _ = hole1d_from_intervals([(F(3, 10), F(49, 100))])
    w = ies_even_witness(hole)
    assert (w.kind, w.index) == (MUST_BE_OUTSIDE_HOLE, 1)
    assert w.points[0].x == F(3, 8)

    w = ies_even_witness(Hole1D(()))
    assert (w.kind, w.index) == (MUST_BE_IN_HOLE, 0)
    assert w.points[0].x == F(1, 4)


def test_ies_witness_corpus():
    """Every hole yields a witness within index p + 1, and it re-validates."""
    rng = random.Random(9)
    den = 256
    for _ in range(60):
        pairs = []
        for _ in range(rng.randint(1, 5)):
            a, b = rng.randrange(den), rng.randrange(den)
            if a != b:
                pairs.append((F(min(a, b), den), F(max(a, b), den)))
        if not pairs:
            continue
        try:
            hole, _ = hole1d_from_intervals(pairs)
        except ValueError:
            continue
        for closed in (False, True):
            w = ies_even_witness(hole, closed=closed)
            assert w.index <= hole.interval_count + 1
            revalidate_ies(hole, w, closed)


def test_res_single_rect():
    hole, _ = hole2d_from_rects([Rect((F(1, 3), F(2, 3)), (F(1, 3), F(2, 3)))])
    w = res_even_witness(BAKER, hole)
    assert w.kind == CORNER_PIGEONHOLE
    # the run-1 sequence survives: both its off-axis positions miss the hole
    assert w.index == 0
    assert {(p.x, p.y) for p in w.points} == {(F(1, 2), F(0)), (F(0), F(1, 2))}


def test_res_empty_hole():
    w = res_even_witness(BAKER, Hole2D(()))
    assert (w.kind, w.index) == (CORNER_PIGEONHOLE, 0)


def test_res_two_rects():
    hole, _ = hole2d_from_rects(
        [
            Rect((F(1, 8), F(3, 8)), (F(1, 8), F(3, 8))),
            Rect((F(5, 8), F(7, 8)), (F(5, 8), F(7, 8))),
        ]
    )
    w = res_even_witness(BAKER, hole)
    assert w.kind == CORNER_PIGEONHOLE
    assert w.index <= len(hole.rects) * 4 + 2
    assert w.facts


def test_res_full_height_reduces_to_circle():
    hole, _ = hole2d_from_rects(
        [Rect((F(3, 4), F(1)), (F(0), F(1)), full_height=True)]
    )
    w = res_even_witness(BAKER, hole)
    assert w.kind == CORNER_PIGEONHOLE
    assert "full-height" in w.facts[0]
    # the inner 1D argument's conclusion is carried along
    assert any("one-dimensional obligation" in f for f in w.facts)


def test_res_closed_mode_pins_then_escapes():
    # closed rect with SW corner exactly on the run-1 fall point (1/2, 0):
    # the families are blocked there, so the next odd run must witness
    hole, _ = hole2d_from_rects([Rect((F(1, 2), F(3, 4)), (F(0), F(1, 4)))])
    w = res_even_witness(BAKER, hole, closed=True)
    assert w.kind == CORNER_PIGEONHOLE
    assert w.index == 1
    assert len(w.points) == 4


def test_res_rect_corpus():
    rng = random.Random(17)
    den = 64
    for _ in range(25):
        rects = []
        for _ in range(rng.randint(1, 2)):
            xs = sorted(rng.sample(range(den + 1), 2))
            ys = sorted(rng.sample(range(den + 1), 2))
            rects.append(
                Rect((F(xs[0], den), F(xs[1], den)), (F(ys[0], den), F(ys[1], den)))
            )
        try:
            hole, _ = hole2d_from_rects(rects)
        except ValueError:
            continue
        w = res_even_witness(BAKER, hole)
        assert w.kind == CORNER_PIGEONHOLE
        assert w.points
        assert w.facts


def test_res_requires_binary_baker():
    with pytest.raises(ValueError):
        res_even_witness(SystemSpec("baker", 3), Hole2D(()))
    with pytest.raises(ValueError):
        res_even_witness(CIRCLE, Hole2D(()))


def test_family_values_approach_fall_points():
    """The two member families converge to the fall value from below."""
    # value of 1^(u-1) 0 1^(2i) 0^inf approaches value of 1^u from below
    u = 3
    limit = F(1) - F(1, 2**u)
    prev = None
    for i in range(1, 8):
        w = (1,) * (u - 1) + (0,) + (1,) * (2 * i)
        v = word_fraction(w, 2)
        assert v < limit
        if prev is not None:
            assert v > prev
        prev = v
