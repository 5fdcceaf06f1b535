"""Exact closed-interval and closed-box algebra.

Regions are finite unions of closed positive-measure boxes with rational
corners, kept regular-closed: degenerate pieces are dropped, touching 1D
pieces are merged, and the pieces are sorted canonically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ResourceCapError

REGION_CAP = 10_000_000

Iv = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Box:
    """Closed interval (y is None) or closed axis-parallel rectangle."""

    x: Iv
    y: Iv | None = None

    def __post_init__(self) -> None:
        if self.x[0] > self.x[1]:
            raise ValueError("x interval reversed")
        if self.y is not None and self.y[0] > self.y[1]:
            raise ValueError("y interval reversed")

    def degenerate(self) -> bool:
        if self.x[0] == self.x[1]:
            return True
        return self.y is not None and self.y[0] == self.y[1]

    def sort_key(self):
        if self.y is None:
            return (self.x[0], self.x[1])
        return (self.x[0], self.y[0], self.x[1], self.y[1])


def iv_intersect(a: Iv, b: Iv) -> Iv | None:
    lo = max(a[0], b[0])
    hi = min(a[1], b[1])
    return (lo, hi) if lo <= hi else None


def box_intersect(a: Box, b: Box) -> Box | None:
    x = iv_intersect(a.x, b.x)
    if x is None:
        return None
    if a.y is None and b.y is None:
        return Box(x)
    assert a.y is not None and b.y is not None
    y = iv_intersect(a.y, b.y)
    if y is None:
        return None
    return Box(x, y)


def canonicalize(boxes: list[Box], cap: int = REGION_CAP) -> tuple[Box, ...]:
    """Drop degenerate pieces, merge touching 1D intervals, sort."""
    boxes = [b for b in boxes if not b.degenerate()]
    if len(boxes) > cap:
        raise ResourceCapError(f"region has {len(boxes)} pieces, cap is {cap}")
    if not boxes:
        return ()
    if boxes[0].y is None:
        ivs = sorted((b.x for b in boxes))
        merged: list[Iv] = [ivs[0]]
        for lo, hi in ivs[1:]:
            if lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
            else:
                merged.append((lo, hi))
        return tuple(Box(iv) for iv in merged)
    return tuple(sorted(boxes, key=Box.sort_key))


def intersect_regions(a: tuple[Box, ...], b: tuple[Box, ...], cap: int = REGION_CAP) -> tuple[Box, ...]:
    out = []
    for p in a:
        for q in b:
            r = box_intersect(p, q)
            if r is not None and not r.degenerate():
                out.append(r)
                if len(out) > cap:
                    raise ResourceCapError(f"region intersection exceeded cap {cap}")
    return canonicalize(out, cap)


def subtract_open_rect(box: Box, x: Iv, y: Iv | None) -> list[Box]:
    """Closed pieces of ``box`` minus an open rectangle, disjoint interiors."""
    assert box.y is not None
    hit_x = iv_intersect(box.x, x)
    if hit_x is None or hit_x[0] == hit_x[1]:
        return [box]
    if y is not None:
        hit_y = iv_intersect(box.y, y)
        if hit_y is None or hit_y[0] == hit_y[1]:
            return [box]
    else:
        hit_y = box.y
    pieces = []
    if box.x[0] < hit_x[0]:
        pieces.append(Box((box.x[0], hit_x[0]), box.y))
    if hit_x[1] < box.x[1]:
        pieces.append(Box((hit_x[1], box.x[1]), box.y))
    if box.y[0] < hit_y[0]:
        pieces.append(Box(hit_x, (box.y[0], hit_y[0])))
    if hit_y[1] < box.y[1]:
        pieces.append(Box(hit_x, (hit_y[1], box.y[1])))
    return pieces


def interiors_meet(a: Box, b: Box) -> bool:
    if not (max(a.x[0], b.x[0]) < min(a.x[1], b.x[1])):
        return False
    if a.y is None or b.y is None:
        return True
    return max(a.y[0], b.y[0]) < min(a.y[1], b.y[1])


def region_x_projection(boxes: tuple[Box, ...]) -> tuple[Iv, ...]:
    """Merged x-intervals covered by the boxes (projection of the region)."""
    if not boxes:
        return ()
    merged = canonicalize([Box(b.x) for b in boxes])
    return tuple(b.x for b in merged)
