"""The even shift and witnesses that no hole can realize it.

The even shift (runs of ones between zeros have even length) is sofic but
is not the surviving system of any hole.  Both proofs are constructive and
run on exact rationals: on the circle, the points coded 0 1^{2n+1} 0^inf
must fall into the hole while interleaved member points must stay out, and
a finite union of intervals cannot satisfy every n; on the stacked square,
each odd-run sequence that falls is approached from below by families of
member sequences, which pins the fall onto a southwest corner of the hole,
and a finite hole runs out of corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceCapError
from .holes import Hole1D, Hole2D, Rect
from .jsonio import frac_str
from .systems import SystemSpec
from .words import Code, Word, word_fraction

MUST_BE_IN_HOLE = "MustBeInHole"
MUST_BE_OUTSIDE_HOLE = "MustBeOutsideHole"
CORNER_PIGEONHOLE = "CornerPigeonhole"

FAMILY_STEP_CAP = 512
AXIS_STEP_CAP = 4096


@dataclass(frozen=True)
class WitnessPoint:
    x: Fraction
    y: Fraction | None
    code: str
    role: str

    def to_json(self) -> dict:
        return {
            "x": frac_str(self.x),
            "y": frac_str(self.y) if self.y is not None else None,
            "code": self.code,
            "role": self.role,
        }


@dataclass(frozen=True)
class Witness:
    kind: str
    index: int
    points: tuple[WitnessPoint, ...]
    facts: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "index": self.index,
            "points": [p.to_json() for p in self.points],
            "facts": list(self.facts),
        }


# -- the even shift itself ---------------------------------------------------

_EVEN_EDGES = {"A": ((0, "A"), (1, "B")), "B": ((1, "A"),)}


def even_language(length: int) -> frozenset[Word]:
    """Length-L path labels of the two-state presentation A-0->A, A-1->B,
    B-1->A; the graph is strongly connected so every path label is a factor."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    out: set[Word] = set()
    stack: list[tuple[Word, str]] = [((), "A"), ((), "B")]
    while stack:
        w, state = stack.pop()
        if len(w) == length:
            out.add(w)
            continue
        for a, nxt in _EVEN_EDGES[state]:
            stack.append((w + (a,), nxt))
    return frozenset(out)


def is_even_code(code: Code) -> bool:
    """Is the stream a one-sided even-shift point?

    Complete runs of ones (a zero on both sides) must have even length; the
    leading run and an all-ones tail are cut by the edge and exempt.  A
    window of one preperiod plus three periods meets every complete-run
    shape an eventually periodic stream can have.
    """
    if code.alphabet_size != 2:
        raise ValueError("the even shift is binary")
    bound = len(code.preperiod) + 3 * len(code.period)
    run = 0
    for i in range(bound):
        if code[i] == 1:
            run += 1
        else:
            if run % 2 == 1 and i - run > 0:
                return False
            run = 0
    return True


def _ones_value(count: int) -> Fraction:
    return Fraction(1) - Fraction(1, 2**count) if count else Fraction(0)


def _x_candidate(n: int) -> tuple[Fraction, Code]:
    code = Code((0,) + (1,) * (2 * n + 1), (0,))
    return Fraction(1, 2) - Fraction(1, 2 ** (2 * n + 2)), code


def _y_candidate(n: int) -> tuple[Fraction, Code]:
    code = Code((0,) + (1,) * (2 * n), (0,))
    return Fraction(1, 2) - Fraction(1, 2 ** (2 * n + 1)), code


def ies_even_witness(hole: Hole1D, closed: bool = False) -> Witness:
    """A violated obligation showing the hole's surviving system is not the
    even shift.

    The member points 0 1^{2n} 0^inf and all forward orbit points of both
    candidate families must stay out of the hole, while the odd-run points
    0 1^{2n+1} 0^inf must fall in.  With p hole intervals the interleaving
    x_{n-1} < y_n < x_n forces some obligation to fail by index p + 1; the
    scan checks stay-out obligations first and returns the first failure.
    """
    p = hole.interval_count
    for n in range(p + 2):
        yv, yc = _y_candidate(n)
        xv, xc = _x_candidate(n)
        checks = [(yv, yc, 0, "member point")]
        v = yv
        for k in range(1, 2 * n + 3):
            v = (2 * v) % 1
            checks.append((v, yc.shift(k), k, "member orbit point"))
        v = xv
        for k in range(1, 2 * n + 4):
            v = (2 * v) % 1
            checks.append((v, xc.shift(k), k, "candidate orbit tail"))
        for value, code, time, role in checks:
            if hole.contains(value, closed=closed):
                return Witness(
                    MUST_BE_OUTSIDE_HOLE,
                    n,
                    (WitnessPoint(value, None, str(code), role),),
                    (
                        f"the stream {code} has only even complete runs of ones, "
                        "so it codes an even-shift point",
                        f"its value {frac_str(value)} (orbit time {time}) lies in "
                        "the hole, but member orbits must avoid the hole forever",
                    ),
                )
    for n in range(p + 2):
        xv, xc = _x_candidate(n)
        if not hole.contains(xv, closed=closed):
            return Witness(
                MUST_BE_IN_HOLE,
                n,
                (WitnessPoint(xv, None, str(xc), "odd-run candidate"),),
                (
                    f"the stream {xc} carries an odd run of ones, so it is not an "
                    "even-shift point, yet every proper shift of it is",
                    f"its orbit therefore must enter the hole at time 0, but "
                    f"{frac_str(xv)} is not in the hole",
                ),
            )
    raise AssertionError(
        "unreachable: intervals covering all candidates must swallow a member point"
    )


# -- stacked-square witness ----------------------------------------------------


def _segs(*parts: tuple[str, int]) -> str:
    return " ".join(f"{s}^{c}" for s, c in parts if c > 0)


def _bi_str(past: str, future: str) -> str:
    left = f"0^inf {past}" if past else "0^inf"
    right = f"{future} 0^inf" if future else "0^inf"
    return f"{left} . {right}"


def _in_iv(v: Fraction, lo: Fraction, hi: Fraction, closed: bool) -> bool:
    return (lo <= v <= hi) if closed else (lo < v < hi)


def _rect_covers(r: Rect, x: Fraction, y: Fraction, closed: bool) -> bool:
    if not _in_iv(x, r.x[0], r.x[1], closed):
        return False
    return r.full_height or _in_iv(y, r.y[0], r.y[1], closed)


def _family_values(base: Word, limit: Fraction) -> list[Fraction]:
    """Values of the member family word(i) = base 0 1^{2i}, i = 1..cap;
    strictly increasing toward the limit value."""
    out = [
        word_fraction(base + (0,) + (1,) * (2 * i), 2)
        for i in range(1, FAMILY_STEP_CAP + 1)
    ]
    if out[-1] >= limit:
        raise AssertionError("family values must increase strictly below their limit")
    return out


def _family_hit(
    hole: Hole2D,
    closed: bool,
    moving: str,
    fixed_val: Fraction,
    values: list[Fraction],
    limit: Fraction,
) -> tuple[int, Fraction] | None:
    """Least family index whose point lies in the hole, decided exactly.

    ``values[i - 1]`` is the moving coordinate at family index i, strictly
    increasing toward ``limit``; per rectangle the sequence either enters
    the rectangle's window below the limit or provably never does.
    """
    best: tuple[int, Fraction] | None = None
    for r in hole.rects:
        fixed_iv = r.x if moving == "y" else r.y
        if moving == "x" and r.full_height:
            fixed_ok = True
        else:
            fixed_ok = _in_iv(fixed_val, fixed_iv[0], fixed_iv[1], closed)
        if not fixed_ok:
            continue
        if moving == "y" and r.full_height:
            cand: tuple[int, Fraction] | None = (1, values[0])
        else:
            lo, hi = r.x if moving == "x" else r.y
            if lo >= limit:
                continue
            cand = None
            for i, v in enumerate(values):
                if _in_iv(v, lo, hi, closed):
                    cand = (i + 1, v)
                    break
                if v > hi:
                    break
            else:
                if values[-1] < lo:
                    raise ResourceCapError(
                        "member family needs more than "
                        f"{FAMILY_STEP_CAP} steps to reach the rectangle"
                    )
            if cand is None:
                continue
        if best is None or cand[0] < best[0]:
            best = cand
    return best


def _least_axis_fall(
    hole: Hole2D, closed: bool, axis: str, c: Fraction
) -> tuple[int, Fraction] | None:
    """Least m >= 1 with (c/2^m, 0) (axis "x") or (0, c/2^m) (axis "y") in
    the hole.

    Only rectangles meeting the axis can catch these points; the geometric
    decay passes below their thresholds after finitely many steps, so the
    search is exact and finite.
    """
    thresholds: list[Fraction] = []
    for r in hole.rects:
        if axis == "x":
            if r.full_height or (closed and r.y[0] == 0):
                thresholds.append(r.x[0])
        elif closed and r.x[0] == 0:
            thresholds.append(Fraction(0) if r.full_height else r.y[0])
    if not thresholds:
        return None
    floor_val = min(thresholds)
    v = c
    for _m in range(1, AXIS_STEP_CAP + 1):
        v = v / 2
        pt = (v, Fraction(0)) if axis == "x" else (Fraction(0), v)
        if hole.contains(pt[0], pt[1], closed=closed):
            return _m, v
        if v < floor_val or (v == floor_val and not closed):
            return None
    raise AssertionError("axis fall search must resolve within the step cap")


def res_even_witness(sys: SystemSpec, hole: Hole2D, closed: bool = False) -> Witness:
    """Corner-pigeonhole evidence that the stacked hole cannot realize the
    even shift.

    Scanning n, the bi-infinite odd-run sequences 0^inf 1^u . 1^w 0^inf
    with u + w = 2n + 1 must fall into the hole at some shift position.  A
    sequence that never falls is itself a violation; a falling position is
    approached from below in each axis by exact member families, so either
    some member lands in the hole or the fall point is pinned to a
    southwest corner of a fresh rectangle, and the rectangles run out.
    """
    if sys.kind != "baker" or sys.branches != 2:
        raise ValueError("the witness lives in the binary stacked system")
    if hole.is_empty():
        half = Fraction(1, 2)
        return Witness(
            CORNER_PIGEONHOLE,
            0,
            (
                WitnessPoint(half, Fraction(0), _bi_str("", "1^1"), "candidate"),
                WitnessPoint(Fraction(0), half, _bi_str("1^1", ""), "candidate"),
            ),
            (
                "the sequence 0^inf 1 0^inf has an odd run, so its orbit must "
                "enter the hole",
                "the hole is empty: no orbit point ever falls in",
            ),
        )
    if hole.all_full_height:
        trace = Hole1D(tuple(hole.x_trace()))
        inner = ies_even_witness(trace, closed=closed)
        return Witness(
            CORNER_PIGEONHOLE,
            inner.index,
            inner.points,
            (
                "every rectangle is a full-height strip, so membership depends "
                "only on the expanding coordinate and the circle argument applies",
                f"one-dimensional obligation violated ({inner.kind}):",
            )
            + inner.facts,
        )
    rect_count = len(hole.rects)
    corners = 4 * sum(1 for r in hole.rects if not r.full_height)
    pinned: dict[int, tuple[Fraction, Fraction]] = {}
    for n in range(max(corners, rect_count) + 2):
        run = 2 * n + 1
        cval = _ones_value(run)
        falls: list[tuple[str, int, Fraction, Fraction, str]] = []
        for u in range(run + 1):
            w = run - u
            x, y = _ones_value(w), _ones_value(u)
            code = _bi_str(_segs(("1", u)), _segs(("1", w)))
            if hole.contains(x, y, closed=closed):
                falls.append(("run", u, x, y, code))
        ax = _least_axis_fall(hole, closed, "x", cval)
        if ax is not None:
            m, v = ax
            falls.append(
                ("axis-x", m, v, Fraction(0), _bi_str("", _segs(("0", m), ("1", run))))
            )
        ay = _least_axis_fall(hole, closed, "y", cval)
        if ay is not None:
            m, v = ay
            falls.append(
                ("axis-y", m, Fraction(0), v, _bi_str(_segs(("1", run), ("0", m)), ""))
            )
        if not falls:
            pts = tuple(
                WitnessPoint(
                    _ones_value(run - u),
                    _ones_value(u),
                    _bi_str(_segs(("1", u)), _segs(("1", run - u))),
                    "candidate orbit point",
                )
                for u in range(run + 1)
            )
            return Witness(
                CORNER_PIGEONHOLE,
                n,
                pts,
                (
                    f"the sequence with one run of {run} ones is not an even-shift "
                    "point, so its orbit must enter the hole",
                    "every shift position inside the run was checked exactly and "
                    "lies outside the hole",
                    "shift positions outside the run put the point on a "
                    "coordinate axis, and the exact axis search found no fall",
                ),
            )
        for fall_kind, idx, x, y, code in falls:
            hit = None
            if fall_kind == "run":
                u, w = idx, run - idx
                if u >= 1:
                    vals = _family_values((1,) * (u - 1), y)
                    got = _family_hit(hole, closed, "y", x, vals, y)
                    if got is not None:
                        i, yv = got
                        hit = (
                            "vertical",
                            i,
                            x,
                            yv,
                            _bi_str(
                                _segs(("1", 2 * i), ("0", 1), ("1", u - 1)),
                                _segs(("1", w)),
                            ),
                        )
                if hit is None and w >= 1:
                    vals = _family_values((1,) * (w - 1), x)
                    got = _family_hit(hole, closed, "x", y, vals, x)
                    if got is not None:
                        i, xv = got
                        hit = (
                            "horizontal",
                            i,
                            xv,
                            y,
                            _bi_str(
                                _segs(("1", u)),
                                _segs(("1", w - 1), ("0", 1), ("1", 2 * i)),
                            ),
                        )
            elif fall_kind == "axis-x":
                m = idx
                vals = _family_values((0,) * m + (1,) * (run - 1), x)
                got = _family_hit(hole, closed, "x", Fraction(0), vals, x)
                if got is not None:
                    i, xv = got
                    hit = (
                        "horizontal",
                        i,
                        xv,
                        Fraction(0),
                        _bi_str(
                            "", _segs(("0", m), ("1", run - 1), ("0", 1), ("1", 2 * i))
                        ),
                    )
            else:
                m = idx
                vals = _family_values((0,) * m + (1,) * (run - 1), y)
                got = _family_hit(hole, closed, "y", Fraction(0), vals, y)
                if got is not None:
                    i, yv = got
                    hit = (
                        "vertical",
                        i,
                        Fraction(0),
                        yv,
                        _bi_str(
                            _segs(("1", 2 * i), ("0", 1), ("1", run - 1), ("0", m)), ""
                        ),
                    )
            if hit is not None:
                direction, i, hx, hy, hcode = hit
                return Witness(
                    CORNER_PIGEONHOLE,
                    n,
                    (
                        WitnessPoint(x, y, code, "falling odd-run orbit point"),
                        WitnessPoint(hx, hy, hcode, "even-shift member"),
                    ),
                    (
                        f"the odd-run orbit point {code} lies in the hole at "
                        f"({frac_str(x)}, {frac_str(y)})",
                        f"the {direction} approaching family consists of even-shift "
                        f"members; its index-{i} point lies in the hole",
                        "member orbits must never enter the hole",
                    ),
                )
            cover = None
            for ri, r in enumerate(hole.rects):
                if _rect_covers(r, x, y, closed):
                    cover = ri
                    break
            assert cover is not None
            r = hole.rects[cover]
            sw_ok = r.x[0] == x and (r.full_height or r.y[0] == y)
            if not sw_ok or cover in pinned:
                raise AssertionError(
                    "unreachable: a fall with both member families blocked pins "
                    "the southwest corner of a fresh rectangle"
                )
            pinned[cover] = (x, y)
    raise AssertionError(
        "unreachable: the scan pins a fresh corner per step and rectangles are finite"
    )


__all__ = [
    "CORNER_PIGEONHOLE",
    "MUST_BE_IN_HOLE",
    "MUST_BE_OUTSIDE_HOLE",
    "Witness",
    "WitnessPoint",
    "even_language",
    "ies_even_witness",
    "is_even_code",
    "res_even_witness",
]
