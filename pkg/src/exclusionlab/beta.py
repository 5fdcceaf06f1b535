"""Expansion thresholds: admissible languages and their strip-hole realization.

A threshold t in (0,1) under the n-branch expanding map is admissible when
every later orbit point stays strictly below t; the itinerary of t then
dominates every shifted itinerary, and the sequences it dominates form the
threshold's shift space.  Cutting the full-height strip (t, 1) out of the
stacked square realizes the same language, which is checked word by word
against the region oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .brackets import _iceil, _ifloor, _mark_range
from .errors import ResourceCapError
from .holes import Hole2D, Rect
from .jsonio import frac_str
from .sft import decode_word
from .systems import Point, SystemSpec, digit_at, orbit_summary, survivor_x_projection
from .words import Code, Word, lt_order, word_str

LANGUAGE_CAP = 1 << 22

FINITE_TYPE = "finite-type"
SOFIC = "sofic"
NOT_SOFIC_WITHIN_HORIZON = "not-sofic-within-horizon"


@dataclass(frozen=True)
class BetaThreshold:
    t: Fraction
    branches: int = 2

    def __post_init__(self) -> None:
        if not isinstance(self.t, Fraction) or not 0 < self.t < 1:
            raise ValueError("threshold must be a rational in (0, 1)")
        if self.branches < 2:
            raise ValueError("need at least two branches")

    def to_json(self) -> dict:
        return {"t": frac_str(self.t), "branches": self.branches}


def is_beta_number(bt: BetaThreshold) -> tuple[bool, int | None]:
    """Does every orbit point after time 0 stay strictly below t?

    The orbit of a rational is eventually periodic, so checking each
    distinct state once decides the condition for all times; on failure
    the least violating time is returned.
    """
    sys = SystemSpec("circle", bt.branches)
    orb = orbit_summary(sys, Point(bt.t))
    for i in range(1, len(orb.states)):
        if orb.states[i].x >= bt.t:
            return False, i
    if orb.preperiod == 0 and orb.states[0].x >= bt.t:
        return False, orb.period
    return True, None


def _require_beta(bt: BetaThreshold) -> None:
    ok, idx = is_beta_number(bt)
    if not ok:
        raise ValueError(f"not an admissible threshold: orbit returns above t at time {idx}")


def beta_itinerary(bt: BetaThreshold) -> Code:
    """Eventually periodic upper itinerary of t, as a Code.

    Uses the right-branch digit at partition boundaries; dominance of every
    shift (the defining property of the upper code) is verified exactly and
    a violation raises.
    """
    _require_beta(bt)
    sys = SystemSpec("circle", bt.branches)
    orb = orbit_summary(sys, Point(bt.t))
    digits = tuple(digit_at(sys, s.x) for s in orb.states)
    code = Code(
        digits[: orb.preperiod],
        digits[orb.preperiod :],
        alphabet_size=bt.branches,
    )
    for k in range(1, len(code.preperiod) + len(code.period) + 1):
        if not lt_order(code.shift(k), code):
            raise ValueError(f"itinerary is not shift-dominant at shift {k}")
    return code


def beta_code(bt: BetaThreshold, length: int) -> Word:
    """Length-L prefix of the upper itinerary."""
    code = beta_itinerary(bt)
    return tuple(code[i] for i in range(length))


def expansion_length(bt: BetaThreshold) -> int | None:
    """Steps until the orbit of t reaches 0, or None if it never does."""
    sys = SystemSpec("circle", bt.branches)
    orb = orbit_summary(sys, Point(bt.t))
    for i, s in enumerate(orb.states):
        if s.x == 0:
            return i
    return None


def classify_beta_threshold(bt: BetaThreshold) -> tuple[str, dict]:
    """Language class of the threshold shift, with supporting evidence.

    A terminating expansion gives finite type, any other rational gives
    sofic; the third tag exists only for raw digit-stream inputs, which
    classify_digit_stream handles.
    """
    _require_beta(bt)
    m = expansion_length(bt)
    code = beta_itinerary(bt)
    evidence = {
        "preperiod": len(code.preperiod),
        "period": len(code.period),
        "expansion_length": m,
    }
    if m is not None:
        return FINITE_TYPE, evidence
    return SOFIC, evidence


def classify_digit_stream(digits: Word, branches: int) -> tuple[str, dict]:
    """A finite prefix of an unstructured digit stream decides nothing:
    the class is reported as undetermined within the seen horizon."""
    for d in digits:
        if not 0 <= d < branches:
            raise ValueError("digit outside the alphabet")
    return NOT_SOFIC_WITHIN_HORIZON, {"horizon": len(digits)}


def _has_nonzero_at_or_after(code: Code, start: int) -> bool:
    pre = code.preperiod
    for i in range(start, len(pre)):
        if pre[i] != 0:
            return True
    return any(d != 0 for d in code.period)


def beta_language(bt: BetaThreshold, length: int) -> frozenset[Word]:
    """All length-L words of the threshold shift.

    Words are grown through the longest-match follower automaton of the
    itinerary: a symbol above the matched digit leaves the language, a
    symbol below falls back along borders.  A word ending in a full match
    survives only if the itinerary still has a nonzero digit ahead, since
    strict dominance must be breakable by some continuation.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    code = beta_itinerary(bt)
    n = bt.branches
    if n**length > LANGUAGE_CAP:
        raise ResourceCapError(f"{n ** length} candidate words exceed the language cap")
    pattern = [code[i] for i in range(length)]
    fail = [0] * (length + 1)
    for i in range(1, length):
        f = fail[i]
        while f > 0 and pattern[i] != pattern[f]:
            f = fail[f]
        fail[i + 1] = f + 1 if pattern[i] == pattern[f] else 0

    def step(state: int, a: int) -> int | None:
        if a > pattern[state]:
            return None
        if a == pattern[state]:
            return state + 1
        f = fail[state]
        while f > 0 and pattern[f] != a:
            f = fail[f]
        return f + 1 if pattern[f] == a else 0

    out: set[Word] = set()
    stack: list[tuple[Word, int]] = [((), 0)]
    while stack:
        w, state = stack.pop()
        if len(w) == length:
            if _has_nonzero_at_or_after(code, state):
                out.add(w)
            continue
        for a in range(n):
            nxt = step(state, a)
            if nxt is not None:
                stack.append((w + (a,), nxt))
    return frozenset(out)


def beta_res_hole(bt: BetaThreshold) -> tuple[SystemSpec, Hole2D]:
    """The threshold shift as a stacked-square exclusion: cut the
    full-height strip (t, 1)."""
    _require_beta(bt)
    sys = SystemSpec("baker", bt.branches)
    rect = Rect((bt.t, Fraction(1)), (Fraction(0), Fraction(1)), full_height=True)
    return sys, Hole2D((rect,))


@dataclass(frozen=True)
class BetaResReport:
    threshold: BetaThreshold
    max_length: int
    region_depth: int
    equal: bool
    mismatch_length: int | None
    mismatch_word: Word | None
    mismatch_side: str | None

    def to_json(self) -> dict:
        doc: dict = {
            "threshold": self.threshold.to_json(),
            "max_length": self.max_length,
            "region_depth": self.region_depth,
            "equal": self.equal,
        }
        if not self.equal:
            doc["mismatch"] = {
                "length": self.mismatch_length,
                "word": word_str(self.mismatch_word or ()),
                "side": self.mismatch_side,
            }
        return doc


def verify_beta_res(
    bt: BetaThreshold, max_length: int, region_depth: int | None = None
) -> BetaResReport:
    """Cross-check the strip hole against the follower automaton.

    One survivor region (at the given depth, defaulting to at least 12) is
    reused for every word length: a word is admitted by the hole when its
    forward cylinder meets the region's x extents with interior.  Reports
    exact equality or the first mismatching word.
    """
    if region_depth is None:
        region_depth = max(max_length, 12)
    if region_depth < max_length:
        raise ValueError("region depth must cover the longest word")
    sys, hole = beta_res_hole(bt)
    ivs = list(survivor_x_projection(sys, hole, region_depth))
    n = bt.branches
    for length in range(1, max_length + 1):
        scale = n**length
        mask = np.zeros(scale, dtype=bool)
        for u, v in ivs:
            _mark_range(mask, _ifloor(u * scale), _iceil(v * scale) - 1)
        hole_words = frozenset(decode_word(int(k), n, length) for k in np.flatnonzero(mask))
        auto_words = beta_language(bt, length)
        if hole_words != auto_words:
            only_hole = sorted(hole_words - auto_words)
            only_auto = sorted(auto_words - hole_words)
            if only_hole and (not only_auto or only_hole[0] <= only_auto[0]):
                w, side = only_hole[0], "hole-only"
            else:
                w, side = only_auto[0], "automaton-only"
            return BetaResReport(bt, max_length, region_depth, False, length, w, side)
    return BetaResReport(bt, max_length, region_depth, True, None, None, None)
