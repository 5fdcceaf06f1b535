"""Inner/outer SFT brackets around an exclusion subshift, and certificates.

Depth-n brackets kill length-n cylinder words by dual rules: the inner
bracket forbids every word whose closed cylinder box meets the open hole,
the outer bracket forbids only words whose box interior sits inside the
hole's closure.  Inner languages grow with depth, outer languages shrink,
and the exclusion language is squeezed in between; once the brackets agree
at some depth the language is pinned at every length.

Masks over cylinder indices are integer-exact: a threshold comparison of
k against floor/ceil of (endpoint * n^depth) decides each kill rule, so
numpy arrays carry the combinatorics without floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

import numpy as np

from .errors import NonConvergenceError, ResourceCapError
from .holes import Hole, Hole1D, Hole2D, Rect, hole1d_from_intervals, hole2d_from_rects
from .jsonio import frac_str
from .regions import Box
from .sft import (
    VERTEX_CAP,
    Sft,
    canonical_forbidden,
    decode_word,
    sft_entropy,
    sft_language,
)
from .systems import (
    Point,
    SystemSpec,
    backward_box_preimages,
    digit_at,
    forward_box_images,
    orbit_summary,
    survivor_x_projection,
)
from .words import Word, word_fraction, word_str

MASK_CAP = 1 << 24
ALIVE_ROUND_CAP = 20_000
DELTA_SEARCH_CAP = 512
MONOTONE_STEP_CAP = 100_000
DISCHARGE_PIECE_CAP = 1 << 12
SUBDIVISION_PIECE_CAP = 1 << 16
EDGE_UNDONE_CAP = 16


def _ifloor(v: Fraction) -> int:
    return v.numerator // v.denominator


def _iceil(v: Fraction) -> int:
    return -((-v.numerator) // v.denominator)


def _mark_range(mask: np.ndarray, lb: int, ub: int) -> None:
    lb = max(lb, 0)
    ub = min(ub, mask.size - 1)
    if lb <= ub:
        mask[lb : ub + 1] = True


def _axis_tables(spans: list[tuple[Fraction, Fraction]], scale: int, wrap: bool):
    """Kill tables over cylinder indices 0..scale-1 for one coordinate.

    in-table: closed cylinder meets some open span; out-table: cylinder
    interior inside some span's closure.  Wrap adds the shifted copy of
    each span so arcs unrolled past 1 reach the indices near 0.
    """
    t_in = np.zeros(scale, dtype=bool)
    t_out = np.zeros(scale, dtype=bool)
    for a, b in spans:
        shifts = (0, -1) if wrap else (0,)
        for s in shifts:
            an, bn = (a + s) * scale, (b + s) * scale
            _mark_range(t_in, _ifloor(an), _iceil(bn) - 1)
            _mark_range(t_out, _iceil(an), _ifloor(bn) - 1)
    return t_in, t_out


def _digit_reversal(base: int, depth: int) -> np.ndarray:
    v = np.arange(base**depth, dtype=np.int64)
    rev = np.zeros_like(v)
    tmp = v.copy()
    for _ in range(depth):
        rev = rev * base + tmp % base
        tmp //= base
    return rev


def _masks_1d(spans, n: int, depth: int, wrap: bool):
    scale = n**depth
    if scale > MASK_CAP:
        raise ResourceCapError(f"{scale} cylinders at depth {depth} exceed the mask cap")
    return _axis_tables(spans, scale, wrap)


def _masks_2d(hole: Hole2D, n: int, depth: int):
    """Kill masks over two-sided window indices p * n^depth + f.

    High digits are the past block (most recent symbol least significant),
    low digits the future block; the y coordinate reads the past reversed.
    """
    nd = n**depth
    if nd * nd > MASK_CAP:
        raise ResourceCapError(
            f"{nd * nd} two-sided cylinders at depth {depth} exceed the mask cap"
        )
    rev = _digit_reversal(n, depth)
    f_in = np.zeros(nd * nd, dtype=bool)
    f_out = np.zeros(nd * nd, dtype=bool)
    for r in hole.rects:
        x_in, x_out = _axis_tables([r.x], nd, wrap=True)
        if r.full_height:
            y_in = np.ones(nd, dtype=bool)
            y_out = np.ones(nd, dtype=bool)
        else:
            y_in, y_out = _axis_tables([r.y], nd, wrap=False)
        yp_in = y_in[rev]
        yp_out = y_out[rev]
        f_in |= (yp_in[:, None] & x_in[None, :]).ravel()
        f_out |= (yp_out[:, None] & x_out[None, :]).ravel()
    return f_in, f_out


def _hole_masks(sys: SystemSpec, hole: Hole, depth: int):
    """(f_in, f_out, two_sided, window) with a reduced window for holes
    that constrain only the x coordinate."""
    n = sys.branches
    if sys.kind == "circle":
        if not isinstance(hole, Hole1D):
            raise ValueError("circle systems take 1D holes")
        f_in, f_out = _masks_1d(hole._unrolled(), n, depth, wrap=True)
        return f_in, f_out, False, depth
    if not isinstance(hole, Hole2D):
        raise ValueError("stacked systems take 2D holes")
    if hole.all_full_height:
        f_in, f_out = _masks_1d(hole.x_trace(), n, depth, wrap=True)
        return f_in, f_out, True, depth
    f_in, f_out = _masks_2d(hole, n, depth)
    return f_in, f_out, True, 2 * depth


def _alive_mask(allowed: np.ndarray, n: int, two_sided: bool) -> np.ndarray:
    """Largest all-degrees-positive subset of the de Bruijn restriction.

    Synchronous pruning: a word stays alive while some successor (and, for
    two-sided shifts, some predecessor) is alive.  Converges because each
    changing round removes at least one word.
    """
    alive = allowed.copy()
    m = alive.size // n
    for _ in range(ALIVE_ROUND_CAP):
        out_any = np.tile(alive.reshape(m, n).any(axis=1), n)
        nxt = alive & out_any
        if two_sided:
            in_any = np.repeat(alive.reshape(n, m).any(axis=0), n)
            nxt &= in_any
        if np.array_equal(nxt, alive):
            return alive
        alive = nxt
    raise ResourceCapError("alive pruning did not reach a fixpoint within the round cap")


def _sft_from_mask(sys: SystemSpec, depth: int, mask: np.ndarray) -> Sft:
    n = sys.branches
    if sys.kind == "circle":
        window, sided = depth, "one"
    else:
        window, sided = 2 * depth, "two"
        if n**window > VERTEX_CAP:
            raise ResourceCapError(
                f"depth {depth} needs window {window}, past the vertex cap"
            )
        if mask.size == n**depth:
            mask = np.tile(mask, n**depth)
    forbidden = frozenset(decode_word(int(k), n, window) for k in np.flatnonzero(mask))
    return Sft(alphabet_size=n, window=window, sided=sided, forbidden=forbidden)


def inner_sft(sys: SystemSpec, hole: Hole, depth: int) -> Sft:
    """Forbid every depth-n cylinder word whose closed box meets the open hole."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    f_in, _, _, _ = _hole_masks(sys, hole, depth)
    return _sft_from_mask(sys, depth, f_in)


def outer_sft(sys: SystemSpec, hole: Hole, depth: int) -> Sft:
    """Forbid only depth-n cylinder words whose box interior lies in the closure."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    _, f_out, _, _ = _hole_masks(sys, hole, depth)
    return _sft_from_mask(sys, depth, f_out)


@dataclass(frozen=True)
class BracketPair:
    depth: int
    inner: Sft
    outer: Sft
    inner_entropy: float | None
    outer_entropy: float | None

    def __post_init__(self) -> None:
        for length in range(1, self.depth + 2):
            if not sft_language(self.inner, length) <= sft_language(self.outer, length):
                raise ValueError(f"bracket inclusion fails at word length {length}")
        if self.inner_entropy is not None and self.outer_entropy is not None:
            if self.inner_entropy > self.outer_entropy + 2e-10:
                raise ValueError("inner entropy exceeds outer entropy")


def bracket_report(sys: SystemSpec, hole: Hole, depth: int) -> BracketPair:
    inner = inner_sft(sys, hole, depth)
    outer = outer_sft(sys, hole, depth)
    return BracketPair(depth, inner, outer, sft_entropy(inner), sft_entropy(outer))


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class BoundaryWitness:
    """One boundary piece together with a verified hole-entry time.

    ``kind`` is endpoint (1D), corner, or segment; coordinates are exact
    fraction strings, ranges are (lo, hi) pairs; negative times mean
    backward iterates.
    """

    kind: str
    x: str | tuple[str, str]
    y: str | tuple[str, str] | None
    time: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "x": self.x, "y": self.y, "time": self.time}


@dataclass(frozen=True)
class StabilizationMethod:
    depth: int


@dataclass(frozen=True)
class EscapeMethod:
    witnesses: tuple[BoundaryWitness, ...]
    stabilization_depth: int
    stabilization_bound: int | None = None


@dataclass(frozen=True)
class Certificate:
    method: StabilizationMethod | EscapeMethod
    sft: Sft

    @property
    def depth(self) -> int:
        if isinstance(self.method, StabilizationMethod):
            return self.method.depth
        return self.method.stabilization_depth

    def to_json(self) -> dict:
        doc: dict = {"depth": self.depth}
        if isinstance(self.method, StabilizationMethod):
            doc["method"] = "stabilization"
        else:
            doc["method"] = "escape"
            doc["witnesses"] = [w.to_json() for w in self.method.witnesses]
            if self.method.stabilization_bound is not None:
                doc["stabilization_bound"] = self.method.stabilization_bound
        doc["forbidden"] = sorted(word_str(w) for w in self.sft.forbidden)
        doc["window"] = self.sft.window
        doc["sided"] = self.sft.sided
        return doc


@dataclass(frozen=True)
class Unknown:
    reason: str
    details: tuple[tuple[str, str], ...] = field(default=())

    def to_json(self) -> dict:
        return {"method": "unknown", "reason": self.reason, "details": dict(self.details)}


def certify_stabilization(sys: SystemSpec, hole: Hole, n_max: int) -> Certificate | Unknown:
    """Least depth at which the two brackets define the same subshift.

    Agreement is decided on alive word sets, which pins the language at
    every length; equal kill masks short-circuit the pruning.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    last: tuple[int, int] | None = None
    for depth in range(1, n_max + 1):
        f_in, f_out, two_sided, _ = _hole_masks(sys, hole, depth)
        if np.array_equal(f_in, f_out):
            return Certificate(StabilizationMethod(depth), inner_sft(sys, hole, depth))
        alive_in = _alive_mask(~f_in, sys.branches, two_sided)
        alive_out = _alive_mask(~f_out, sys.branches, two_sided)
        if np.array_equal(alive_in, alive_out):
            return Certificate(StabilizationMethod(depth), inner_sft(sys, hole, depth))
        last = (int(alive_in.sum()), int(alive_out.sum()))
    details = [("n_max", str(n_max))]
    if last is not None:
        details += [("inner_alive", str(last[0])), ("outer_alive", str(last[1]))]
    return Unknown("brackets did not stabilize within the depth budget", tuple(details))


def _entry_time_1d(sys: SystemSpec, hole: Hole1D, e: Fraction) -> int | None:
    """First forward time the endpoint's exact orbit meets the open hole.

    None is a proof of never: the orbit is eventually periodic and every
    distinct state has been checked.
    """
    orb = orbit_summary(sys, Point(e))
    for i in range(1, len(orb.states)):
        if hole.contains(orb.states[i].x):
            return i
    if hole.contains(orb.states[0].x) and orb.preperiod == 0:
        return orb.period
    return None


def _delta_depth(sys: SystemSpec, hole: Hole1D, e: Fraction, m: int) -> int:
    """Least cylinder depth D >= m at which both depth-D cylinders touching
    the endpoint map into the open hole after m steps."""
    n = sys.branches
    for depth in range(max(m, 1), DELTA_SEARCH_CAP):
        scale = n**depth
        v = e * scale
        if v.denominator == 1:
            ks = [(int(v) - 1) % scale, int(v) % scale]
        else:
            ks = [_ifloor(v)]
        ok = True
        for k in ks:
            lo = (Fraction(k, scale) * n**m) % 1
            hi = lo + Fraction(1, n ** (depth - m))
            if not hole.interval_within_open(lo, hi):
                ok = False
                break
        if ok:
            return depth
    raise NonConvergenceError(f"no stabilizing cylinder depth for endpoint {e}")


def _monotone_entry(
    y0: Fraction, d_block: int, n: int, tau: int, a: Fraction, b: Fraction
) -> int | None:
    """Least k >= 1 with the k-th iterate of y -> (y + D)/n^tau in (a, b).

    The sequence moves monotonically toward the fixed point D/(n^tau - 1),
    so every branch below terminates or proves impossibility.
    """
    m = n**tau
    w = Fraction(d_block, m - 1)
    if y0 == w:
        return 1 if a < w < b else None
    if y0 < w:
        if w <= a:
            return None
        y, k = y0, 0
        while k < MONOTONE_STEP_CAP:
            k += 1
            y = (y + d_block) / m
            if a < y < b:
                return k
            if y >= b:
                return None
        raise NonConvergenceError("monotone tail search exceeded its step cap")
    if w >= b:
        return None
    y, k = y0, 0
    while k < MONOTONE_STEP_CAP:
        k += 1
        y = (y + d_block) / m
        if a < y < b:
            return k
        if y <= a:
            return None
    raise NonConvergenceError("monotone tail search exceeded its step cap")


def _drive_orbit(t: Fraction, n: int) -> tuple[list[Fraction], int, int]:
    """Expanding-coordinate orbit with the clamped right-branch digit.

    Unlike the circle map this keeps 1 fixed (digit n - 1), which is the
    inverse stacked map's behavior on the top edge of the square.
    """
    seen: dict[Fraction, int] = {}
    states: list[Fraction] = []
    cur = t
    while cur not in seen:
        if len(states) > MONOTONE_STEP_CAP:
            raise NonConvergenceError("drive orbit did not recur within the step cap")
        seen[cur] = len(states)
        states.append(cur)
        j = min(floor(cur * n), n - 1)
        cur = cur * n - j
    rho = seen[cur]
    return states, rho, len(states) - rho


def _directional_entry_2d(hole: Hole2D, n: int, p: Point, backward: bool) -> int | None:
    """Exact least entry time of the point's forward (or backward) orbit
    into the open hole.

    In either direction one coordinate follows the expanding map (driving
    the branch digits) while the other contracts through the same digits,
    so the orbit is a driven affine recursion over an eventually periodic
    digit stream; tails are settled by monotone fixed-point comparison.
    """
    assert p.y is not None
    drive0 = p.y if backward else p.x
    slow0 = p.x if backward else p.y
    drives, rho, tau = _drive_orbit(drive0, n)

    def drive_at(i: int) -> Fraction:
        return drives[i] if i < len(drives) else drives[rho + (i - rho) % tau]

    best: int | None = None
    slow = slow0
    slows: list[Fraction] = [slow0]
    for i in range(1, rho + tau + 1):
        j = min(floor(drive_at(i - 1) * n), n - 1)
        slow = (slow + j) / n
        slows.append(slow)
        x, y = (slow, drive_at(i)) if backward else (drive_at(i), slow)
        if hole.contains(x, y):
            return i
    for s in range(max(rho, 1), rho + tau + 1):
        d_block = 0
        for t in range(tau):
            d_block += min(floor(drive_at(s + t) * n), n - 1) * n**t
        for r in hole.rects:
            if backward:
                gate = None if r.full_height else r.y
                cond: tuple[Fraction, Fraction] | None = r.x
            else:
                gate = r.x
                cond = None if r.full_height else r.y
            if gate is not None and not gate[0] < drive_at(s) < gate[1]:
                continue
            if cond is None:
                k = 1
            else:
                k = _monotone_entry(slows[s], d_block, n, tau, cond[0], cond[1])
            if k is not None:
                cand = s + k * tau
                if best is None or cand < best:
                    best = cand
    return best


def _containing_cylinders(t: Fraction, n: int, depth: int, wrap: bool) -> list[int]:
    scale = n**depth
    v = t * scale
    if v.denominator == 1:
        k = int(v)
        if wrap:
            return sorted({(k - 1) % scale, k % scale})
        out = []
        if k > 0:
            out.append(k - 1)
        if k < scale:
            out.append(k)
        return out
    return [_ifloor(v)]


def _cyl_iv(k: int, n: int, depth: int) -> tuple[Fraction, Fraction]:
    return Fraction(k, n**depth), Fraction(k + 1, n**depth)


def _discharge_box(sys: SystemSpec, hole: Hole2D, box: Box, budget: int) -> int | None:
    """Signed time with the whole box provably inside the open hole, if any."""
    # Once a piece's expanding coordinate covers the whole circle it stays
    # full forever, and no open span can contain the closed full extent
    # (the point 0 lies in no non-wrapping open interval), so that time
    # direction can never discharge and iterating it further is wasted.
    has_full_height = any(r.full_height for r in hole.rects)
    for step, direction in ((forward_box_images, 1), (backward_box_preimages, -1)):
        pieces = [box]
        for i in range(1, budget + 1):
            nxt: list[Box] = []
            for b in pieces:
                nxt.extend(step(sys, b))
            pieces = nxt
            if not pieces or len(pieces) > DISCHARGE_PIECE_CAP:
                break
            if direction == 1 and any(b.x[1] - b.x[0] == 1 for b in pieces):
                break
            if (
                direction == -1
                and not has_full_height
                and any(b.y[1] - b.y[0] == 1 for b in pieces)
            ):
                break
            if all(hole.box_inside_open(b) for b in pieces):
                return i * direction
    return None


def _subdivide_edge(
    sys: SystemSpec,
    hole: Hole2D,
    orient: str,
    c: Fraction,
    lo: Fraction,
    hi: Fraction,
    n_max: int,
) -> tuple[list[BoundaryWitness], list[str]]:
    """Cover an edge with dyadic pieces and discharge each by box iteration.

    orient "h": the edge is y = c, x in [lo, hi]; "v": x = c, y in [lo, hi].
    A piece is discharged when some cylinder box containing it maps wholly
    into the open hole within the time budget; otherwise it splits until
    the depth budget runs out.
    """
    n = sys.branches
    witnesses: list[BoundaryWitness] = []
    undone: list[str] = []
    examined = 0
    scale0 = n
    start = [(1, k) for k in range(_ifloor(lo * scale0), _iceil(hi * scale0))]
    stack = [(d, k) for d, k in start]
    while stack:
        if len(undone) >= EDGE_UNDONE_CAP:
            # the edge already fails; exploring the rest cannot change that
            break
        depth, k = stack.pop()
        examined += 1
        if examined > SUBDIVISION_PIECE_CAP:
            raise ResourceCapError("edge subdivision exceeded the piece cap")
        u, v = _cyl_iv(k, n, depth)
        if v <= lo or u >= hi:
            continue
        span = (max(u, lo), min(v, hi))
        boxes = []
        for kc in _containing_cylinders(c, n, depth, wrap=(orient == "v")):
            civ = _cyl_iv(kc, n, depth)
            boxes.append(Box((u, v), civ) if orient == "h" else Box(civ, (u, v)))
        time = None
        for b in boxes:
            time = _discharge_box(sys, hole, b, n_max)
            if time is not None:
                break
        if time is not None:
            span_s = (frac_str(span[0]), frac_str(span[1]))
            if orient == "h":
                witnesses.append(BoundaryWitness("segment", span_s, frac_str(c), time))
            else:
                witnesses.append(BoundaryWitness("segment", frac_str(c), span_s, time))
            continue
        if depth >= n_max:
            label = f"{orient}:{frac_str(c)}:[{frac_str(span[0])},{frac_str(span[1])}]"
            undone.append(label)
            continue
        for j in range(n):
            stack.append((depth + 1, k * n + j))
    return witnesses, undone


def certify_escape(sys: SystemSpec, hole: Hole, n_max: int) -> Certificate | Unknown:
    """Certify that every hole-boundary point eventually falls into the hole.

    1D boundaries are finite and decided exactly by orbit; 2D corners are
    decided exactly in both time directions, and edges are covered by
    recursive dyadic subdivision (a semi-decision).  Success re-runs the
    stabilization search to produce the certified SFT.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    witnesses: list[BoundaryWitness] = []
    if sys.kind == "circle":
        if not isinstance(hole, Hole1D):
            raise ValueError("circle systems take 1D holes")
        if hole.is_empty():
            return Unknown("empty hole has no boundary to certify")
        bound = 0
        for e in hole.boundary():
            t = _entry_time_1d(sys, hole, e)
            if t is None:
                return Unknown(
                    "a boundary point provably never enters the hole",
                    (("endpoint", frac_str(e)),),
                )
            witnesses.append(BoundaryWitness("endpoint", frac_str(e), None, t))
            bound = max(bound, _delta_depth(sys, hole, e, t))
        stab = certify_stabilization(sys, hole, max(n_max, bound))
        if isinstance(stab, Unknown):
            return Unknown(
                "boundary falls but stabilization was not reached within its bound",
                stab.details,
            )
        method = EscapeMethod(tuple(witnesses), stab.method.depth, bound)
        return Certificate(method, stab.sft)
    if not isinstance(hole, Hole2D):
        raise ValueError("stacked systems take 2D holes")
    if hole.is_empty():
        return Unknown("empty hole has no boundary to certify")
    n = sys.branches
    undone_all: list[str] = []
    for r in hole.rects:
        if not r.full_height:
            for cx, cy in r.corners():
                fwd = _directional_entry_2d(hole, n, Point(cx, cy), backward=False)
                bwd = _directional_entry_2d(hole, n, Point(cx, cy), backward=True)
                if fwd is None and bwd is None:
                    return Unknown(
                        "a hole corner provably never enters the hole",
                        (("corner", f"({frac_str(cx)}, {frac_str(cy)})"),),
                    )
                t = fwd if fwd is not None else -int(bwd)  # type: ignore[arg-type]
                witnesses.append(BoundaryWitness("corner", frac_str(cx), frac_str(cy), t))
        edges: list[tuple[str, Fraction, Fraction, Fraction]] = [
            ("v", r.x[0], r.y[0], r.y[1]),
            ("v", r.x[1], r.y[0], r.y[1]),
        ]
        if not r.full_height:
            edges += [
                ("h", r.y[0], r.x[0], r.x[1]),
                ("h", r.y[1], r.x[0], r.x[1]),
            ]
        for orient, c, lo, hi in edges:
            ws, undone = _subdivide_edge(sys, hole, orient, c, lo, hi, n_max)
            witnesses.extend(ws)
            undone_all.extend(undone)
    if undone_all:
        return Unknown(
            "subdivision budget exhausted on boundary segments",
            tuple(("segment", s) for s in undone_all[:16]),
        )
    stab = certify_stabilization(sys, hole, n_max)
    if isinstance(stab, Unknown):
        return Unknown(
            "boundary falls but stabilization was not reached within the depth budget",
            stab.details,
        )
    return Certificate(EscapeMethod(tuple(witnesses), stab.method.depth), stab.sft)


def oracle_language(sys: SystemSpec, hole: Hole, length: int) -> frozenset[Word]:
    """Brute-force reference language at one word length.

    A word is admitted when its cylinder box meets the depth-``length``
    survivor region with nonempty interior; everything reduces to exact
    interval stabbing against the region's x extents.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    n = sys.branches
    scale = n**length
    if scale > MASK_CAP:
        raise ResourceCapError(f"{scale} words exceed the mask cap")
    ivs = list(survivor_x_projection(sys, hole, length))
    mask = np.zeros(scale, dtype=bool)
    for u, v in ivs:
        _mark_range(mask, _ifloor(u * scale), _iceil(v * scale) - 1)
    return frozenset(decode_word(int(k), n, length) for k in np.flatnonzero(mask))


def hole_from_sft(s: Sft) -> tuple[SystemSpec, Hole]:
    """Realize an SFT as an exclusion subshift: cut out its forbidden cylinders.

    The hole is the interior of the union of the forbidden words' cylinder
    boxes (touching boxes merge); one-sided shifts land on the circle,
    two-sided shifts become full-height strips in the stacked square.
    """
    n = s.alphabet_size
    if s.explicit_vertices is not None:
        _, words = canonical_forbidden(s)
    else:
        words = s.forbidden
    ivs = []
    for w in sorted(words):
        lo = word_fraction(w, n)
        ivs.append((lo, lo + Fraction(1, n ** len(w))))
    sys = SystemSpec("circle" if s.sided == "one" else "baker", n)
    if not ivs:
        hole: Hole = Hole1D(()) if s.sided == "one" else Hole2D(())
        return sys, hole
    if s.sided == "one":
        hole1, _ = hole1d_from_intervals(ivs)
        return sys, hole1
    rects = [Rect(iv, (Fraction(0), Fraction(1)), full_height=True) for iv in ivs]
    hole2, _ = hole2d_from_rects(rects)
    return sys, hole2
