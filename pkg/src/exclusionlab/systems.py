"""Model systems: the n-branch circle map and its invertible stacked variant.

The circle map sends x to n*x mod 1 on [0, 1) with 0 = 1 identified.  The
stacked (baker) variant acts on the closed unit square, pushing the consumed
branch digit into the y coordinate, so y reads out the past itinerary with
the most recent symbol in the most significant digit.  Branch boundaries take
the right branch: the digit at x is floor(n*x).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import NonRecurringOrbitError
from .holes import Hole, Hole1D, Hole2D
from .regions import (
    REGION_CAP,
    Box,
    canonicalize,
    intersect_regions,
    iv_intersect,
    region_x_projection,
    subtract_open_rect,
)
from .words import Word, check_word, word, word_fraction, word_str

ORBIT_STEP_CAP = 100_000


@dataclass(frozen=True)
class SystemSpec:
    kind: str
    branches: int = 2

    def __post_init__(self) -> None:
        if self.kind not in ("circle", "baker"):
            raise ValueError(f"kind must be 'circle' or 'baker', got {self.kind!r}")
        if self.branches < 2:
            raise ValueError("branches must be at least 2")

    def to_json(self) -> dict:
        return {"kind": self.kind, "branches": self.branches}


def system_from_json(doc: dict) -> SystemSpec:
    return SystemSpec(str(doc["kind"]), int(doc.get("branches", 2)))


@dataclass(frozen=True)
class Point:
    """Exact point: x on the circle [0, 1), optional y in [0, 1]."""

    x: Fraction
    y: Fraction | None = None

    def __post_init__(self) -> None:
        x = Fraction(self.x)
        if not 0 <= x <= 1:
            raise ValueError(f"x must lie in [0, 1], got {x}")
        object.__setattr__(self, "x", x % 1)
        if self.y is not None:
            y = Fraction(self.y)
            if not 0 <= y <= 1:
                raise ValueError(f"y must lie in [0, 1], got {y}")
            object.__setattr__(self, "y", y)


def digit_at(sys: SystemSpec, x: Fraction) -> int:
    """Branch digit consumed at x; boundaries belong to the right branch."""
    return floor(x * sys.branches)


def map_step(sys: SystemSpec, p: Point) -> Point:
    n = sys.branches
    if sys.kind == "circle":
        return Point((p.x * n) % 1)
    if p.y is None:
        raise ValueError("stacked system point needs a y coordinate")
    j = digit_at(sys, p.x)
    return Point(p.x * n - j, (p.y + j) / n)


def map_step_inverse(sys: SystemSpec, p: Point, past_symbol: int | None = None) -> Point:
    """Exact preimage under the stacked map.

    With ``past_symbol`` the branch is forced and must actually contain the
    point; without it the branch is read off the y coordinate.
    """
    if sys.kind != "baker":
        raise ValueError("only the stacked system is invertible")
    if p.y is None:
        raise ValueError("stacked system point needs a y coordinate")
    n = sys.branches
    if past_symbol is None:
        j = min(floor(p.y * n), n - 1)
    else:
        if not 0 <= past_symbol < n:
            raise ValueError(f"past symbol {past_symbol} outside alphabet")
        j = past_symbol
        if not 0 <= p.y * n - j <= 1:
            raise ValueError("chosen inverse branch does not contain the point")
    return Point((p.x + j) / n, p.y * n - j)


@dataclass(frozen=True)
class OrbitSummary:
    preperiod: int
    period: int
    states: tuple[Point, ...]


def orbit_summary(sys: SystemSpec, p: Point, step_cap: int = ORBIT_STEP_CAP) -> OrbitSummary:
    """Exact eventually periodic forward orbit.

    Circle orbits always recur (denominators never grow).  Stacked orbits may
    not recur exactly within the budget, in which case this raises
    NonRecurringOrbitError rather than guessing.
    """
    seen: dict[Point, int] = {}
    states: list[Point] = []
    cur = p
    for _ in range(step_cap + 1):
        if cur in seen:
            k = seen[cur]
            return OrbitSummary(k, len(states) - k, tuple(states))
        seen[cur] = len(states)
        states.append(cur)
        cur = map_step(sys, cur)
    raise NonRecurringOrbitError(
        f"no exact recurrence within {step_cap} steps from {p}"
    )


@dataclass(frozen=True)
class BiWord:
    """Two-sided word: ``left`` lists past symbols s_-j .. s_-1, ``right``
    lists s_0 .. s_k-1.  Printed as ``left.right``."""

    left: Word
    right: Word

    def __str__(self) -> str:
        return f"{word_str(self.left)}.{word_str(self.right)}"

    @staticmethod
    def parse(text: str) -> "BiWord":
        head, _, tail = text.partition(".")
        return BiWord(word(head), word(tail))


def cylinder_box(sys: SystemSpec, w: Word | BiWord) -> Box:
    """Closed cylinder of an itinerary word.

    Future symbols pin x; past symbols pin y, most recent symbol most
    significant.  A plain word is read as future-only.
    """
    n = sys.branches
    if sys.kind == "circle":
        if isinstance(w, BiWord):
            raise ValueError("circle cylinders take one-sided words")
        check_word(w, n)
        lo = word_fraction(w, n)
        return Box((lo, lo + Fraction(1, n ** len(w))))
    bw = w if isinstance(w, BiWord) else BiWord((), tuple(w))
    check_word(bw.left, n)
    check_word(bw.right, n)
    x_lo = word_fraction(bw.right, n)
    x_iv = (x_lo, x_lo + Fraction(1, n ** len(bw.right)))
    y_digits = tuple(reversed(bw.left))
    y_lo = word_fraction(y_digits, n)
    y_iv = (y_lo, y_lo + Fraction(1, n ** len(y_digits)))
    return Box(x_iv, y_iv)


def _expansion_codes(x: Fraction, n: int, length: int) -> set[Word]:
    """All base-n itineraries of length ``length`` for a coordinate in [0, 1).

    Interior branch points carry two codes; the state x = 1 stands for the
    all-(n-1) tail.  At most two codes result.
    """
    out: set[Word] = set()

    def walk(cur: Fraction, prefix: tuple[int, ...]) -> None:
        if len(prefix) == length:
            out.add(prefix)
            return
        if cur == 1:
            walk(Fraction(1), prefix + (n - 1,))
            return
        d = floor(cur * n)
        walk(cur * n - d, prefix + (d,))
        if d > 0 and cur * n == d:
            walk(Fraction(1), prefix + (d - 1,))

    walk(x, ())
    return out


def codes_of_point(sys: SystemSpec, p: Point, length: int) -> set[Word] | set[BiWord]:
    """All length-``length`` itinerary words whose cylinder contains the point."""
    n = sys.branches
    x_codes = _expansion_codes(p.x, n, length)
    if sys.kind == "circle":
        return x_codes
    if p.y is None:
        raise ValueError("stacked system point needs a y coordinate")
    if p.y == 1:
        y_codes: set[Word] = {(n - 1,) * length}
    else:
        y_codes = _expansion_codes(p.y, n, length)
    return {
        BiWord(tuple(reversed(yc)), xc) for xc in x_codes for yc in y_codes
    }


# -- exact box dynamics ----------------------------------------------------


def forward_box_images(sys: SystemSpec, box: Box) -> list[Box]:
    """Pieces of the image of a closed box, split at branch boundaries.

    A degenerate x extent uses the right branch only, matching the map.
    """
    n = sys.branches
    if box.x[0] == box.x[1]:
        j = min(floor(box.x[0] * n), n - 1)
        branches = [j]
    else:
        branches = list(range(n))
    out = []
    for j in branches:
        lo = max(box.x[0], Fraction(j, n))
        hi = min(box.x[1], Fraction(j + 1, n))
        if lo > hi or (lo == hi and box.x[0] != box.x[1]):
            continue
        x_iv = (lo * n - j, hi * n - j)
        if sys.kind == "circle":
            out.append(Box(x_iv))
        else:
            assert box.y is not None
            out.append(Box(x_iv, ((box.y[0] + j) / n, (box.y[1] + j) / n)))
    return out


def backward_box_preimages(sys: SystemSpec, box: Box) -> list[Box]:
    """Pieces of the full preimage of a closed box.

    On the stacked system the past symbol is read off y; a degenerate y
    extent uses the branch the inverse map would take.
    """
    n = sys.branches
    if sys.kind == "circle":
        return [Box(((box.x[0] + j) / n, (box.x[1] + j) / n)) for j in range(n)]
    assert box.y is not None
    if box.y[0] == box.y[1]:
        branches = [min(floor(box.y[0] * n), n - 1)]
    else:
        branches = list(range(n))
    out = []
    for j in branches:
        x_iv = ((box.x[0] + j) / n, (box.x[1] + j) / n)
        lo = max(box.y[0], Fraction(j, n))
        hi = min(box.y[1], Fraction(j + 1, n))
        if lo > hi or (lo == hi and box.y[0] != box.y[1]):
            continue
        out.append(Box(x_iv, (lo * n - j, hi * n - j)))
    return out


def complement_region(sys: SystemSpec, hole: Hole) -> tuple[Box, ...]:
    """The closed complement of the hole (the allowed set), regular-closed."""
    if sys.kind == "circle":
        if not isinstance(hole, Hole1D):
            raise ValueError("circle systems take 1D holes")
        return hole.complement_region()
    if not isinstance(hole, Hole2D):
        raise ValueError("stacked systems take 2D holes")
    pieces = [Box((Fraction(0), Fraction(1)), (Fraction(0), Fraction(1)))]
    for r in hole.rects:
        nxt: list[Box] = []
        for b in pieces:
            nxt.extend(subtract_open_rect(b, r.x, None if r.full_height else r.y))
        pieces = nxt
    return canonicalize(pieces)


def survivor_regions(
    sys: SystemSpec, hole: Hole, depth: int, cap: int = REGION_CAP
) -> tuple[Box, ...]:
    """Closed positive-measure region surviving ``depth`` steps of exclusion.

    Circle: points whose iterates 0..depth avoid the open hole, as the
    regular-closed set K intersected with pullbacks.  Stacked: both time
    directions out to ``depth``.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    allowed = complement_region(sys, hole)
    if sys.kind == "circle":
        region = allowed
        for _ in range(depth):
            pulled = []
            for b in region:
                pulled.extend(backward_box_preimages(sys, b))
            region = intersect_regions(canonicalize(pulled, cap), allowed, cap)
        return region
    if isinstance(hole, Hole2D) and hole.all_full_height:
        # Full-height holes never constrain y: the future-side region keeps
        # full height forever and its x sections evolve exactly like the
        # circle survivor of the hole's bottom-edge trace, so that side runs
        # in one dimension and the final intersection distributes over the
        # past pieces instead of forming the all-pairs product.
        trace = Hole1D(tuple(hole.x_trace()))
        sections = survivor_regions(SystemSpec("circle", sys.branches), trace, depth, cap)
        xs = [b.x for b in sections]
        bwd = allowed
        for _ in range(depth):
            pushed = []
            for b in bwd:
                pushed.extend(forward_box_images(sys, b))
            bwd = intersect_regions(canonicalize(pushed, cap), allowed, cap)
        out = []
        for q in bwd:
            for iv in xs:
                piece = iv_intersect(q.x, iv)
                if piece is not None and piece[0] < piece[1]:
                    out.append(Box(piece, q.y))
        return canonicalize(out, cap)
    fwd = allowed
    bwd = allowed
    for _ in range(depth):
        pulled = []
        for b in fwd:
            pulled.extend(backward_box_preimages(sys, b))
        fwd = intersect_regions(canonicalize(pulled, cap), allowed, cap)
        pushed = []
        for b in bwd:
            pushed.extend(forward_box_images(sys, b))
        bwd = intersect_regions(canonicalize(pushed, cap), allowed, cap)
    return intersect_regions(fwd, bwd, cap)


def survivor_x_projection(
    sys: SystemSpec, hole: Hole, depth: int, cap: int = REGION_CAP
) -> tuple[tuple[Fraction, Fraction], ...]:
    """Merged x extents of the depth-``depth`` survivor region.

    The stacked map's x step depends on x alone, so projection to x commutes
    with forward images, and intersecting with a full-height constraint
    commutes with projection as well.  For all-full-height holes both time
    directions therefore reduce to circle-interval runs, skipping the
    product-shaped 2D region entirely; every other hole projects the full
    region.
    """
    if sys.kind == "baker" and isinstance(hole, Hole2D) and hole.all_full_height:
        circle = SystemSpec("circle", sys.branches)
        trace = Hole1D(tuple(hole.x_trace()))
        fwd = survivor_regions(circle, trace, depth, cap)
        allowed = trace.complement_region()
        bwd = allowed
        for _ in range(depth):
            pushed = []
            for b in bwd:
                pushed.extend(forward_box_images(circle, b))
            bwd = intersect_regions(canonicalize(pushed, cap), allowed, cap)
        return tuple(b.x for b in intersect_regions(fwd, bwd, cap))
    return region_x_projection(survivor_regions(sys, hole, depth, cap))
