"""Hole descriptions: open arcs on the circle, open rectangles in the square.

Holes are stored as the interior of the union of the input closures, so
inputs whose closures overlap or touch are merged on load.  A 1D arc with
``lo > hi`` wraps through the point 0 = 1 and contains it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .regions import Box, Iv, iv_intersect

Arc = tuple[Fraction, Fraction]


def _check_unit(v: Fraction, name: str) -> None:
    if not 0 <= v <= 1:
        raise ValueError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class Hole1D:
    """Finite union of open circle arcs with pairwise disjoint closures."""

    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        for lo, hi in self.arcs:
            _check_unit(lo, "arc endpoint")
            _check_unit(hi, "arc endpoint")
            if lo == hi:
                raise ValueError("empty arc")

    @property
    def interval_count(self) -> int:
        return len(self.arcs)

    def is_empty(self) -> bool:
        return not self.arcs

    def _unrolled(self) -> list[Arc]:
        # each arc as (lo, hi) on the line with hi possibly > 1 for wrap arcs
        out = []
        for lo, hi in self.arcs:
            out.append((lo, hi if lo < hi else hi + 1))
        return out

    def contains(self, x: Fraction, closed: bool = False) -> bool:
        for lo, hi in self._unrolled():
            for t in (x, x + 1):
                if closed:
                    if lo <= t <= hi:
                        return True
                elif lo < t < hi:
                    return True
        return False

    def boundary(self) -> tuple[Fraction, ...]:
        pts = set()
        for lo, hi in self.arcs:
            pts.add(lo % 1)
            pts.add(hi % 1)
        return tuple(sorted(pts))

    def meets_interval_openly(self, u: Fraction, v: Fraction) -> bool:
        """Does the closed interval [u, v] meet the open hole?"""
        for lo, hi in self._unrolled():
            for a, b in ((u, v), (u + 1, v + 1)):
                if a < hi and b > lo:
                    return True
        return False

    def interval_within_closure(self, u: Fraction, v: Fraction) -> bool:
        """Is the open interval (u, v) inside the closure of one arc?"""
        for lo, hi in self._unrolled():
            for a, b in ((u, v), (u + 1, v + 1)):
                if a >= lo and b <= hi:
                    return True
        return False

    def interval_within_open(self, u: Fraction, v: Fraction) -> bool:
        """Is the closed interval [u, v] strictly inside one open arc?"""
        for lo, hi in self._unrolled():
            for a, b in ((u, v), (u + 1, v + 1)):
                if lo < a and b < hi:
                    return True
        return False

    def open_interval_within_open(self, u: Fraction, v: Fraction) -> bool:
        """Is the open interval (u, v) inside one open arc?  Endpoints may touch."""
        for lo, hi in self._unrolled():
            for a, b in ((u, v), (u + 1, v + 1)):
                if lo <= a and b <= hi:
                    return True
        return False

    def complement_region(self) -> tuple[Box, ...]:
        """The closed complement as intervals inside [0, 1]."""
        if not self.arcs:
            return (Box((Fraction(0), Fraction(1))),)
        cuts: list[Arc] = []
        for lo, hi in self._unrolled():
            if hi <= 1:
                cuts.append((lo, hi))
            else:
                cuts.append((lo, Fraction(1)))
                cuts.append((Fraction(0), hi - 1))
        cuts.sort()
        out = []
        pos = Fraction(0)
        for lo, hi in cuts:
            if lo > pos:
                out.append(Box((pos, lo)))
            pos = max(pos, hi)
        if pos < 1:
            out.append(Box((pos, Fraction(1))))
        return tuple(out)

    def gaps(self) -> list[tuple[Fraction, Fraction]]:
        """Closed complementary arcs between consecutive holes, cyclic order.

        Each gap is (start, end) with end possibly > 1 when it wraps.  Empty
        list when the hole is empty or a single arc is the whole report's
        business (one arc still yields its single complementary gap).
        """
        if not self.arcs:
            return []
        spans = sorted(self._unrolled())
        out = []
        for i, (_, hi) in enumerate(spans):
            nxt_lo = spans[(i + 1) % len(spans)][0]
            start = hi % 1 if hi > 1 else hi
            end = nxt_lo if (i + 1) < len(spans) else nxt_lo + 1
            if end < start:
                end += 1
            out.append((start, end))
        return out

    def to_json(self) -> dict:
        from .jsonio import frac_str

        return {"intervals": [[frac_str(lo), frac_str(hi)] for lo, hi in self.arcs]}


def hole1d_from_intervals(pairs: list[tuple[Fraction, Fraction]]) -> tuple[Hole1D, list[str]]:
    """Merge input arcs whose closures overlap or touch; report the merges."""
    warnings: list[str] = []
    spans = []
    for lo, hi in pairs:
        _check_unit(lo, "interval endpoint")
        _check_unit(hi, "interval endpoint")
        if lo == hi:
            raise ValueError("empty interval in hole description")
        lo = lo % 1
        span = hi - lo if hi > lo else (hi + 1) - lo
        spans.append((lo, lo + span))
    spans.sort()
    merged: list[list[Fraction]] = []
    for lo, hi in spans:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
            warnings.append("merged overlapping or touching hole intervals")
        else:
            merged.append([lo, hi])
    # wrap join: a piece reaching past 1 may swallow leading pieces
    if len(merged) > 1 and merged[-1][1] >= 1 and merged[-1][1] - 1 >= merged[0][0]:
        last = merged.pop()
        merged[0] = [last[0], max(merged[0][1] + 1, last[1])]
        warnings.append("merged overlapping or touching hole intervals")
        while len(merged) > 1 and merged[0][1] - 1 >= merged[1][0]:
            merged[0][1] = max(merged[0][1], merged[1][1] + 1)
            merged.pop(1)
            warnings.append("merged overlapping or touching hole intervals")
    arcs = []
    for lo, hi in merged:
        if hi - lo >= 1:
            note = "hole closure covers the whole circle"
            if len(spans) > 1:
                return Hole1D(((Fraction(0), Fraction(1)),)), warnings + [note]
            return Hole1D(((Fraction(0), Fraction(1)),)), warnings
        arcs.append((lo, hi if hi <= 1 else hi - 1))
    return Hole1D(tuple(arcs)), warnings


@dataclass(frozen=True)
class Rect:
    """Open rectangle; full-height rects span y = [0, 1] with closed ends."""

    x: Iv
    y: Iv
    full_height: bool = False

    def __post_init__(self) -> None:
        for v in (*self.x, *self.y):
            _check_unit(v, "rectangle corner")
        if self.x[0] >= self.x[1]:
            raise ValueError("rectangle x extent empty")
        if self.full_height:
            if self.y != (Fraction(0), Fraction(1)):
                raise ValueError("full-height rectangle must have y = [0, 1]")
        elif self.y[0] >= self.y[1]:
            raise ValueError("rectangle y extent empty")

    def contains(self, x: Fraction, y: Fraction, closed: bool = False) -> bool:
        if self.full_height:
            return self.x[0] <= x <= self.x[1] if closed else self.x[0] < x < self.x[1]
        if closed:
            return self.x[0] <= x <= self.x[1] and self.y[0] <= y <= self.y[1]
        return self.x[0] < x < self.x[1] and self.y[0] < y < self.y[1]

    def corners(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return (
            (self.x[0], self.y[0]),
            (self.x[0], self.y[1]),
            (self.x[1], self.y[0]),
            (self.x[1], self.y[1]),
        )


@dataclass(frozen=True)
class Hole2D:
    """Finite union of open rectangles with pairwise disjoint closures."""

    rects: tuple[Rect, ...]

    def is_empty(self) -> bool:
        return not self.rects

    @property
    def all_full_height(self) -> bool:
        return all(r.full_height for r in self.rects)

    def contains(self, x: Fraction, y: Fraction, closed: bool = False) -> bool:
        return any(r.contains(x, y, closed) for r in self.rects)

    def meets_box_openly(self, box: Box) -> bool:
        assert box.y is not None
        for r in self.rects:
            if not (box.x[0] < r.x[1] and box.x[1] > r.x[0]):
                continue
            if r.full_height or (box.y[0] < r.y[1] and box.y[1] > r.y[0]):
                return True
        return False

    def box_within_closure(self, box: Box) -> bool:
        """Is the open interior of ``box`` inside the closure of one rect?"""
        assert box.y is not None
        for r in self.rects:
            if box.x[0] >= r.x[0] and box.x[1] <= r.x[1]:
                if r.full_height or (box.y[0] >= r.y[0] and box.y[1] <= r.y[1]):
                    return True
        return False

    def box_inside_open(self, box: Box) -> bool:
        """Is the closed box inside the open hole?"""
        assert box.y is not None
        for r in self.rects:
            if box.x[0] > r.x[0] and box.x[1] < r.x[1]:
                if r.full_height or (box.y[0] > r.y[0] and box.y[1] < r.y[1]):
                    return True
        return False

    def x_trace(self) -> list[Iv]:
        """x extents of full-height rects (the hole's trace on the bottom edge)."""
        return [r.x for r in self.rects if r.full_height]

    def to_json(self) -> dict:
        from .jsonio import frac_str

        rects = []
        for r in self.rects:
            doc = {
                "x": [frac_str(r.x[0]), frac_str(r.x[1])],
                "y": [frac_str(r.y[0]), frac_str(r.y[1])],
            }
            if r.full_height:
                doc["full_height"] = True
            rects.append(doc)
        return {"rects": rects}


def hole2d_from_rects(rects: list[Rect]) -> tuple[Hole2D, list[str]]:
    """Merge rectangles whose closures overlap when the union is a rectangle."""
    warnings: list[str] = []
    pending = list(rects)
    out: list[Rect] = []
    while pending:
        r = pending.pop()
        merged_any = False
        for i, q in enumerate(out):
            if _closures_meet(r, q):
                u = _rect_union(r, q)
                if u is None:
                    raise ValueError(
                        "rectangle closures overlap but their union is not a rectangle"
                    )
                out[i] = u
                warnings.append("merged overlapping or touching hole rectangles")
                merged_any = True
                # the union may now touch another rect, reprocess it
                pending.append(out.pop(i))
                break
        if not merged_any:
            out.append(r)
    out.sort(key=lambda r: (r.x[0], r.y[0], r.x[1], r.y[1]))
    return Hole2D(tuple(out)), warnings


def _closures_meet(a: Rect, b: Rect) -> bool:
    if iv_intersect(a.x, b.x) is None:
        return False
    if a.full_height or b.full_height:
        return True
    return iv_intersect(a.y, b.y) is not None


def _rect_union(a: Rect, b: Rect) -> Rect | None:
    ay = (Fraction(0), Fraction(1)) if a.full_height else a.y
    by = (Fraction(0), Fraction(1)) if b.full_height else b.y
    if a.full_height == b.full_height and ay == by:
        if max(a.x[0], b.x[0]) <= min(a.x[1], b.x[1]):
            return Rect(
                (min(a.x[0], b.x[0]), max(a.x[1], b.x[1])), ay, a.full_height
            )
    if a.x == b.x and not a.full_height and not b.full_height:
        if max(a.y[0], b.y[0]) <= min(a.y[1], b.y[1]):
            return Rect(a.x, (min(a.y[0], b.y[0]), max(a.y[1], b.y[1])), False)
    # containment cases
    if a.x[0] <= b.x[0] and a.x[1] >= b.x[1] and (a.full_height or (not b.full_height and a.y[0] <= b.y[0] and a.y[1] >= b.y[1])):
        return a
    if b.x[0] <= a.x[0] and b.x[1] >= a.x[1] and (b.full_height or (not a.full_height and b.y[0] <= a.y[0] and b.y[1] >= a.y[1])):
        return b
    return None

Hole = Hole1D | Hole2D
