"""Transitive-component filtration, gap amalgamation, and the count bound.

The depth-n inner brackets grow toward the exclusion subshift, and their
transitive components organize into a forest: each component at depth n
has exactly one parent at depth n + 1, found by following a periodic
point of the child upward.  Gap amalgamation certifies complement arcs
that fall into the hole, sharpening the a-priori bound on how many
components the limiting subshift can carry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .brackets import Certificate, certify_stabilization, inner_sft
from .holes import Hole, Hole1D
from .jsonio import entropy_str, frac_str
from .sft import Sft, sft_components, sft_entropy, sft_language
from .systems import SystemSpec
from .words import Word, word_str

GAP_PIECE_CAP = 4096


@dataclass(frozen=True)
class ComponentNode:
    """One transitive component of a depth-level inner bracket."""

    depth: int
    index: int
    vertices: tuple[Word, ...]
    cycle: Word
    entropy: float | None
    countable: bool
    parent: tuple[int, int] | None

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "index": self.index,
            "size": len(self.vertices),
            "cycle": word_str(self.cycle),
            "entropy": entropy_str(self.entropy),
            "countable": self.countable,
            "parent": list(self.parent) if self.parent is not None else None,
        }


@dataclass(frozen=True)
class ComponentForest:
    system: SystemSpec
    depth: int
    levels: tuple[tuple[ComponentNode, ...], ...]

    def level(self, depth: int) -> tuple[ComponentNode, ...]:
        return self.levels[depth - 1]

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "depth": self.depth,
            "levels": [
                {"depth": d + 1, "components": [c.to_json() for c in lvl]}
                for d, lvl in enumerate(self.levels)
            ],
        }


def _component_cycle(comp: Sft) -> tuple[Word, ...]:
    """Deterministic cycle inside a transitive component: walk smallest
    successors from the smallest vertex until a vertex repeats."""
    succ = comp.successors()
    seen: dict[Word, int] = {}
    path: list[Word] = []
    cur = min(comp.vertices())
    while cur not in seen:
        seen[cur] = len(path)
        path.append(cur)
        cur = succ[cur][0]
    return tuple(path[seen[cur] :])


def _period_word(cycle: tuple[Word, ...]) -> Word:
    return tuple(v[0] for v in cycle)


def _periodic_block(period: Word, sided: str, next_depth: int) -> Word:
    """A window word of the cycle's periodic point at the next depth level.

    One-sided windows read forward from the cycle start; two-sided windows
    of size 2(d+1) are centered so index -d-1 .. d maps into the period.
    """
    k = len(period)
    if sided == "one":
        return tuple(period[i % k] for i in range(next_depth))
    d = next_depth - 1
    return tuple(period[(i + d) % k] for i in range(-(d + 1), d + 1))


def transitive_filtration(sys: SystemSpec, hole: Hole, depth: int) -> ComponentForest:
    """Components of every inner bracket up to ``depth``, with parent links.

    The child's cycle determines a periodic point that survives at the next
    level; its window word lies in exactly one parent component because
    component vertex sets are disjoint.  Each link is then re-verified by
    factor containment: child vertices must be words of the parent.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    per_level: list[list[Sft]] = []
    for d in range(1, depth + 1):
        per_level.append(sft_components(inner_sft(sys, hole, d)))
    nodes: list[list[ComponentNode]] = []
    for d in range(depth, 0, -1):
        comps = per_level[d - 1]
        level_nodes: list[ComponentNode] = []
        for i, comp in enumerate(comps):
            cycle = _component_cycle(comp)
            period = _period_word(cycle)
            parent = None
            if d < depth:
                block = _periodic_block(period, comp.sided, d + 1)
                for j, cand in enumerate(per_level[d]):
                    if block in cand.vertices():
                        parent = (d + 1, j)
                        break
                if parent is None:
                    raise RuntimeError(
                        f"no parent component contains the periodic block {block}"
                    )
                window = len(next(iter(comp.vertices())))
                parent_words = sft_language(per_level[d][parent[1]], window)
                missing = set(comp.vertices()) - parent_words
                if missing:
                    raise RuntimeError(
                        f"parent link fails factor verification at depth {d}: "
                        f"{word_str(sorted(missing)[0])}"
                    )
            succ = comp.successors()
            verts = tuple(sorted(comp.vertices()))
            countable = all(len(succ[v]) == 1 for v in verts)
            level_nodes.append(
                ComponentNode(
                    depth=d,
                    index=i,
                    vertices=verts,
                    cycle=period,
                    entropy=sft_entropy(comp),
                    countable=countable,
                    parent=parent,
                )
            )
        nodes.append(level_nodes)
    nodes.reverse()
    return ComponentForest(sys, depth, tuple(tuple(lvl) for lvl in nodes))


# -- gap amalgamation --------------------------------------------------------


@dataclass(frozen=True)
class GapStatus:
    start: Fraction
    end: Fraction
    certified: bool
    time: int | None

    def to_json(self) -> dict:
        return {
            "start": frac_str(self.start),
            "end": frac_str(self.end),
            "certified": self.certified,
            "time": self.time,
        }


@dataclass(frozen=True)
class AmalgamationReport:
    interval_count: int
    gaps: tuple[GapStatus, ...]
    r_hat: int

    def to_json(self) -> dict:
        return {
            "interval_count": self.interval_count,
            "gaps": [g.to_json() for g in self.gaps],
            "r_hat": self.r_hat,
        }


def _map_pieces(pieces: list[tuple[Fraction, Fraction]], n: int):
    """One exact forward step of the n-branch expansion on closed intervals,
    split at branch points so each piece maps affinely."""
    out: list[tuple[Fraction, Fraction]] = []
    for a, b in pieces:
        cuts = [a]
        j = a.numerator * n // a.denominator + 1
        while Fraction(j, n) < b:
            cuts.append(Fraction(j, n))
            j += 1
        cuts.append(b)
        for u, v in zip(cuts, cuts[1:]):
            br = min(u.numerator * n // u.denominator, n - 1)
            out.append((u * n - br, v * n - br))
    return out


def amalgamate_gaps(sys: SystemSpec, hole: Hole1D, n_max: int) -> AmalgamationReport:
    """Certify complement arcs that fall wholly into the open hole.

    A gap is certified once every piece of some forward image lies inside
    the hole; pieces discharge individually and the recorded time is the
    slowest one.  The surviving-interval estimate keeps at least one arc
    whenever the hole is nonempty.
    """
    if sys.kind != "circle":
        raise ValueError("gap amalgamation applies to circle systems")
    if hole.is_empty():
        return AmalgamationReport(0, (), 0)
    statuses: list[GapStatus] = []
    certified = 0
    for start, end in hole.gaps():
        if end <= 1:
            pieces = [(start, end)]
        else:
            pieces = [(start, Fraction(1)), (Fraction(0), end - 1)]
        time: int | None = None
        done = False
        for k in range(1, n_max + 1):
            pieces = _map_pieces(pieces, sys.branches)
            if len(pieces) > GAP_PIECE_CAP:
                break
            pieces = [p for p in pieces if not hole.open_interval_within_open(p[0], p[1])]
            if not pieces:
                time = k
                done = True
                break
        statuses.append(GapStatus(start, end, done, time))
        if done:
            certified += 1
    p = hole.interval_count
    r_hat = max(1, p - certified)
    return AmalgamationReport(p, tuple(statuses), r_hat)


@dataclass(frozen=True)
class BoundReport:
    """Transitive-component count check against the amalgamation bound.

    Countable components (single cycles) count once, uncountable ones
    twice; the bound is 2 * r_hat plus the number of branch points, with
    2p + branch points as the no-certification fallback.  ``provisional``
    marks counts read off an uncertified inner bracket.
    """

    depth: int
    provisional: bool
    interval_count: int
    r_hat: int
    branch_points: int
    bound: int
    fallback_bound: int
    countable: int
    uncountable: int
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "provisional": self.provisional,
            "interval_count": self.interval_count,
            "r_hat": self.r_hat,
            "branch_points": self.branch_points,
            "bound": self.bound,
            "fallback_bound": self.fallback_bound,
            "countable": self.countable,
            "uncountable": self.uncountable,
            "satisfied": self.satisfied,
        }


def check_component_bound(sys: SystemSpec, hole: Hole1D, n_max: int) -> BoundReport:
    if sys.kind != "circle":
        raise ValueError("the component bound applies to circle systems")
    cert = certify_stabilization(sys, hole, n_max)
    if isinstance(cert, Certificate):
        depth, provisional = cert.depth, False
        sft = cert.sft
    else:
        depth, provisional = n_max, True
        sft = inner_sft(sys, hole, n_max)
    comps = sft_components(sft)
    countable = 0
    uncountable = 0
    for comp in comps:
        succ = comp.successors()
        if all(len(succ[v]) == 1 for v in comp.vertices()):
            countable += 1
        else:
            uncountable += 1
    amal = amalgamate_gaps(sys, hole, n_max)
    n = sys.branches
    bound = 2 * amal.r_hat + n
    fallback = 2 * amal.interval_count + n
    return BoundReport(
        depth=depth,
        provisional=provisional,
        interval_count=amal.interval_count,
        r_hat=amal.r_hat,
        branch_points=n,
        bound=bound,
        fallback_bound=fallback,
        countable=countable,
        uncountable=uncountable,
        satisfied=countable + 2 * uncountable <= bound,
    )


def forest_dot(forest: ComponentForest) -> str:
    """Deterministic DOT rendering: one cluster per depth level, edges from
    each component to its parent one level up."""
    lines = ["digraph filtration {", "  rankdir=BT;", '  node [shape=box];']
    for lvl in forest.levels:
        if not lvl:
            continue
        d = lvl[0].depth
        lines.append(f"  subgraph cluster_depth_{d} {{")
        lines.append(f'    label="depth {d}";')
        for c in lvl:
            label = f"c{c.index}|V|={len(c.vertices)}\\ncycle {word_str(c.cycle)}"
            lines.append(f'    d{d}_c{c.index} [label="{label}"];')
        lines.append("  }")
    for lvl in forest.levels:
        for c in lvl:
            if c.parent is not None:
                pd, pj = c.parent
                lines.append(f"  d{c.depth}_c{c.index} -> d{pd}_c{pj};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "AmalgamationReport",
    "BoundReport",
    "ComponentForest",
    "ComponentNode",
    "GapStatus",
    "amalgamate_gaps",
    "check_component_bound",
    "forest_dot",
    "transitive_filtration",
    "GAP_PIECE_CAP",
]
