"""Seeded experiments on how often random rectangle holes certify.

Corners are sampled as dyadics k/2^corner_depth from a splitmix64 stream,
so every report is reproducible bit for bit from its seed and every
boundary orbit is exactly eventually periodic.  Each sampled hole gets the
full certification pipeline; fractions of certified samples are reported
per depth budget and never extrapolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brackets import Certificate, Unknown, certify_escape, certify_stabilization
from .errors import ResourceCapError
from .holes import Hole2D, Rect, hole2d_from_rects
from .jsonio import frac_str
from .systems import SystemSpec

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z >> 27) * 0x94D049BB133111EB; return z ^ z >> 31."""

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64


def _draw_rect(rng: SplitMix64, corner_depth: int) -> Rect:
    den = 2**corner_depth
    while True:
        vals = [Fraction(rng.next() % (den + 1), den) for _ in range(4)]
        x = (min(vals[0], vals[1]), max(vals[0], vals[1]))
        y = (min(vals[2], vals[3]), max(vals[2], vals[3]))
        if x[0] == x[1] or y[0] == y[1]:
            continue
        return Rect(x, y)


@dataclass(frozen=True)
class SampleRecord:
    index: int
    rect: Rect
    stab_status: str
    stab_depth: int | None
    escape_status: str
    escape_detail: str | None
    stab_cert: Certificate | None
    escape_cert: Certificate | None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "rect": {
                "x": [frac_str(self.rect.x[0]), frac_str(self.rect.x[1])],
                "y": [frac_str(self.rect.y[0]), frac_str(self.rect.y[1])],
            },
            "stabilization": self.stab_status,
            "stabilization_depth": self.stab_depth,
            "escape": self.escape_status,
            "escape_detail": self.escape_detail,
        }


@dataclass(frozen=True)
class GenericityReport:
    seed: int
    count: int
    corner_depth: int
    n_max_list: tuple[int, ...]
    samples: tuple[SampleRecord, ...]
    fractions: dict[int, str]
    failures: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "corner_depth": self.corner_depth,
            "n_max_list": list(self.n_max_list),
            "fractions": {str(k): v for k, v in self.fractions.items()},
            "failures": list(self.failures),
            "samples": [s.to_json() for s in self.samples],
        }


def sample_rectangle_genericity(
    seed: int,
    count: int,
    corner_depth: int = 8,
    n_max_list: tuple[int, ...] = (4, 8, 12),
) -> GenericityReport:
    """Sample random open rectangle holes in the binary stacked square and
    certify each one.

    A sample is certified at budget n when the stabilization search finds
    its least depth d* <= n, so the fractions are non-decreasing in n by
    construction.  Resource caps are recorded on the sample and count as
    uncertified.  No timings appear anywhere: a rerun with the same
    arguments serializes identically.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    if corner_depth < 1:
        raise ValueError("corner_depth must be at least 1")
    if not n_max_list or any(v < 1 for v in n_max_list):
        raise ValueError("n_max_list entries must be at least 1")
    sys = SystemSpec("baker", 2)
    budget = max(n_max_list)
    rng = SplitMix64(seed)
    samples: list[SampleRecord] = []
    for i in range(count):
        rect = _draw_rect(rng, corner_depth)
        hole, _ = hole2d_from_rects((rect,))
        assert isinstance(hole, Hole2D)
        escape_status, escape_detail, escape_cert = "unknown", None, None
        try:
            esc = certify_escape(sys, hole, budget)
            if isinstance(esc, Certificate):
                escape_status, escape_cert = "certified", esc
            else:
                escape_detail = esc.reason
        except ResourceCapError as e:
            escape_status, escape_detail = "capped", str(e)
        stab_status, stab_depth, stab_cert = "unknown", None, None
        try:
            stab = certify_stabilization(sys, hole, budget)
            if isinstance(stab, Certificate):
                stab_status = "certified"
                stab_depth = stab.depth
                stab_cert = stab
        except ResourceCapError:
            stab_status = "capped"
        samples.append(
            SampleRecord(
                i, rect, stab_status, stab_depth,
                escape_status, escape_detail, stab_cert, escape_cert,
            )
        )
    fractions = {}
    for n in n_max_list:
        k = sum(1 for s in samples if s.stab_depth is not None and s.stab_depth <= n)
        fractions[n] = f"{k}/{count}"
    failures = tuple(s.index for s in samples if s.stab_depth is None)
    return GenericityReport(
        seed, count, corner_depth, tuple(n_max_list), tuple(samples),
        fractions, failures,
    )


__all__ = [
    "GenericityReport",
    "SampleRecord",
    "SplitMix64",
    "sample_rectangle_genericity",
]
