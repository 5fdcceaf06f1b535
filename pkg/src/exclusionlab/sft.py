"""Shifts of finite type presented on a sliding-window vertex graph.

A window-``m`` presentation has one vertex per allowed length-``m`` word and
an edge ``u -> v`` whenever ``u`` and ``v`` overlap in ``m - 1`` symbols and
the fused ``(m + 1)``-word contains no forbidden factor.  With all forbidden
words at most ``m`` long the fused check is automatic, so the graph is the
de Bruijn restriction of the vertex set; explicitly imported graphs may
additionally drop edges.

One-sided shifts read right-infinite walks, two-sided shifts bi-infinite
walks.  All language and entropy queries go through the set of *alive*
vertices: the ones that actually occur in such walks.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AlphabetMismatchError,
    NonConvergenceError,
    ResourceCapError,
)
from .words import Word, check_word, contains_factor, word, word_str

VERTEX_CAP = 1 << 22
ENTROPY_TOL = 1e-10
ENTROPY_ITERATION_CAP = 200_000


@dataclass(frozen=True)
class Sft:
    alphabet_size: int
    window: int
    sided: str = "one"
    forbidden: frozenset[Word] = frozenset()
    explicit_vertices: frozenset[Word] | None = None
    explicit_edges: frozenset[tuple[Word, Word]] | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if self.sided not in ("one", "two"):
            raise ValueError(f"sided must be 'one' or 'two', got {self.sided!r}")
        if self.alphabet_size < 2:
            raise ValueError("alphabet_size must be at least 2")
        if self.window < 1:
            raise ValueError("window must be at least 1")
        for w in self.forbidden:
            check_word(w, self.alphabet_size)
            if len(w) > self.window:
                raise ValueError(
                    f"forbidden word {word_str(w)} longer than window {self.window}"
                )
        if self.explicit_vertices is not None:
            for v in self.explicit_vertices:
                check_word(v, self.alphabet_size)
                if len(v) != self.window:
                    raise ValueError("explicit vertices must have window length")

    # -- graph structure ---------------------------------------------------

    def vertices(self) -> frozenset[Word]:
        """Allowed window words (explicit set if one was given)."""
        if self.explicit_vertices is not None:
            return self.explicit_vertices
        if "vertices" not in self._cache:
            if self.alphabet_size ** self.window > VERTEX_CAP:
                raise ResourceCapError(
                    f"window {self.window} over alphabet {self.alphabet_size} "
                    f"exceeds the vertex cap {VERTEX_CAP}"
                )
            out = []
            for k in range(self.alphabet_size ** self.window):
                w = decode_word(k, self.alphabet_size, self.window)
                if not any(contains_factor(w, f) for f in self.forbidden):
                    out.append(w)
            self._cache["vertices"] = frozenset(out)
        return self._cache["vertices"]

    def successors(self) -> dict[Word, tuple[Word, ...]]:
        if "successors" not in self._cache:
            vs = self.vertices()
            succ: dict[Word, tuple[Word, ...]] = {}
            if self.explicit_edges is not None:
                by_src: dict[Word, list[Word]] = {v: [] for v in vs}
                for u, v in self.explicit_edges:
                    if u in vs and v in vs:
                        by_src[u].append(v)
                succ = {u: tuple(sorted(t)) for u, t in by_src.items()}
            else:
                for u in vs:
                    nxt = [
                        u[1:] + (a,)
                        for a in range(self.alphabet_size)
                        if u[1:] + (a,) in vs
                    ]
                    succ[u] = tuple(sorted(nxt))
            self._cache["successors"] = succ
        return self._cache["successors"]

    def predecessors(self) -> dict[Word, tuple[Word, ...]]:
        if "predecessors" not in self._cache:
            pred: dict[Word, list[Word]] = {v: [] for v in self.vertices()}
            for u, outs in self.successors().items():
                for v in outs:
                    pred[v].append(u)
            self._cache["predecessors"] = {
                v: tuple(sorted(t)) for v, t in pred.items()
            }
        return self._cache["predecessors"]

    def alive(self) -> frozenset[Word]:
        """Vertices occurring in an infinite walk of the right sidedness.

        One-sided: vertices with an infinite forward continuation.  Two-sided:
        vertices on a bi-infinite walk, i.e. alive in both directions.
        """
        if "alive" not in self._cache:
            succ = self.successors()
            pred = self.predecessors()
            out_deg = {u: len(succ[u]) for u in succ}
            in_deg = {u: len(pred[u]) for u in pred}

            def is_dead(u: Word) -> bool:
                if self.sided == "two":
                    return out_deg[u] == 0 or in_deg[u] == 0
                return out_deg[u] == 0

            alive = set(succ)
            dead = {u for u in alive if is_dead(u)}
            queue = list(dead)
            while queue:
                u = queue.pop()
                alive.discard(u)
                for p in pred[u]:
                    out_deg[p] -= 1
                    if p in alive and p not in dead and is_dead(p):
                        dead.add(p)
                        queue.append(p)
                for v in succ[u]:
                    in_deg[v] -= 1
                    if self.sided == "two" and v in alive and v not in dead and is_dead(v):
                        dead.add(v)
                        queue.append(v)
            self._cache["alive"] = frozenset(alive)
        return self._cache["alive"]

    def edge_count(self) -> int:
        return sum(len(t) for t in self.successors().values())

    def is_empty(self) -> bool:
        return not self.alive()

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        if self.explicit_vertices is not None:
            doc: dict = {
                "alphabet_size": self.alphabet_size,
                "window": self.window,
                "sided": self.sided,
                "vertices": sorted(word_str(v) for v in self.explicit_vertices),
            }
            if self.explicit_edges is not None:
                doc["edges"] = sorted(
                    [word_str(u), word_str(v)] for u, v in self.explicit_edges
                )
            return doc
        return {
            "alphabet_size": self.alphabet_size,
            "window": self.window,
            "sided": self.sided,
            "forbidden": sorted(word_str(w) for w in self.forbidden),
        }


def decode_word(k: int, base: int, length: int) -> Word:
    out = [0] * length
    for i in range(length - 1, -1, -1):
        k, d = divmod(k, base)
        out[i] = d
    return tuple(out)


def encode_word(w: Word, base: int) -> int:
    v = 0
    for d in w:
        v = v * base + d
    return v


def sft_build(
    alphabet_size: int,
    window: int,
    forbidden: frozenset[Word] | set[Word] | list[Word],
    sided: str = "one",
) -> Sft:
    """Build the SFT forbidding the given words, presented at ``window``."""
    fset = frozenset(tuple(w) for w in forbidden)
    return Sft(alphabet_size, window, sided, fset)


def sft_from_json(doc: dict) -> Sft:
    n = int(doc["alphabet_size"])
    m = int(doc["window"])
    sided = doc.get("sided", "one")
    if "vertices" in doc:
        vs = frozenset(word(t) for t in doc["vertices"])
        edges = None
        if "edges" in doc:
            edges = frozenset((word(u), word(v)) for u, v in doc["edges"])
        return Sft(n, m, sided, frozenset(), vs, edges)
    forb = frozenset(word(t) for t in doc.get("forbidden", []))
    return Sft(n, m, sided, forb)


def _effective_window(s: Sft) -> int:
    # Explicit edge sets may cut overlap pairs, which is a window + 1 constraint.
    return s.window + (1 if s.explicit_edges is not None else 0)


def sft_language(s: Sft, length: int) -> frozenset[Word]:
    """All length-``length`` words read along infinite walks."""
    if length < 1:
        raise ValueError("length must be positive")
    key = ("language", length)
    if key in s._cache:
        return s._cache[key]
    alive = s.alive()
    if length <= s.window:
        out = {v[i : i + length] for v in alive for i in range(s.window - length + 1)}
        result = frozenset(out)
    else:
        succ = s.successors()
        frontier: set[Word] = set(alive)
        for _ in range(length - s.window):
            nxt: set[Word] = set()
            for w in frontier:
                tail = w[-s.window :]
                for v in succ[tail]:
                    if v in alive:
                        nxt.add(w + (v[-1],))
            frontier = nxt
        result = frozenset(frontier)
    s._cache[key] = result
    return result


def _tarjan_sccs(succ: dict[Word, tuple[Word, ...]], nodes: frozenset[Word]) -> list[list[Word]]:
    index: dict[Word, int] = {}
    low: dict[Word, int] = {}
    on_stack: set[Word] = set()
    stack: list[Word] = []
    sccs: list[list[Word]] = []
    counter = 0
    for root in sorted(nodes):
        if root in index:
            continue
        work = [(root, iter([v for v in succ.get(root, ()) if v in nodes]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            u, it = work[-1]
            advanced = False
            for v in it:
                if v not in index:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack.add(v)
                    work.append((v, iter([t for t in succ.get(v, ()) if t in nodes])))
                    advanced = True
                    break
                if v in on_stack:
                    low[u] = min(low[u], index[v])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[u])
            if low[u] == index[u]:
                comp = []
                while True:
                    v = stack.pop()
                    on_stack.discard(v)
                    comp.append(v)
                    if v == u:
                        break
                sccs.append(comp)
    return sccs


def sft_components(s: Sft) -> list[Sft]:
    """Transitive components: cycle-carrying strongly connected subgraphs.

    Returned as vertex-induced SFTs, sorted by their minimal vertex.
    """
    succ = s.successors()
    alive = s.alive()
    comps = []
    for scc in _tarjan_sccs(succ, alive):
        members = set(scc)
        has_edge = any(v in members for u in scc for v in succ[u])
        if has_edge:
            comps.append(sorted(members))
    comps.sort(key=lambda c: c[0])
    out = []
    for comp in comps:
        edges = None
        if s.explicit_edges is not None:
            members = set(comp)
            edges = frozenset(
                (u, v) for u, v in s.explicit_edges if u in members and v in members
            )
        out.append(
            Sft(
                s.alphabet_size,
                s.window,
                s.sided,
                s.forbidden,
                frozenset(comp),
                edges,
            )
        )
    return out


def _scc_spectral_log(
    members: list[Word], succ: dict[Word, tuple[Word, ...]], tol: float
) -> float:
    """ln of the spectral radius of one strongly connected component.

    Power iteration on (A + I) with two-sided eigenvalue bounds from the
    iterate's ratios; (A + I) is primitive on a strongly connected graph, so
    the enclosure tightens geometrically.  Raises NonConvergenceError at the
    iteration cap.
    """
    idx = {v: i for i, v in enumerate(members)}
    src = []
    dst = []
    for u in members:
        for v in succ[u]:
            if v in idx:
                src.append(idx[u])
                dst.append(idx[v])
    if not src:
        raise ValueError("component has no edges")
    src_a = np.asarray(src, dtype=np.int64)
    dst_a = np.asarray(dst, dtype=np.int64)
    m = len(members)
    vec = np.ones(m, dtype=np.float64)
    for _ in range(ENTROPY_ITERATION_CAP):
        nxt = vec + np.bincount(dst_a, weights=vec[src_a], minlength=m)
        ratios = nxt / vec
        lo = float(ratios.min()) - 1.0
        hi = float(ratios.max()) - 1.0
        if lo > 0 and math.log(hi) - math.log(lo) <= tol:
            return (math.log(hi) + math.log(lo)) / 2.0
        vec = nxt / nxt.max()
    raise NonConvergenceError(
        f"entropy power iteration did not reach tolerance {tol} "
        f"within {ENTROPY_ITERATION_CAP} iterations"
    )


def sft_entropy(s: Sft, tol: float = ENTROPY_TOL) -> float | None:
    """Topological entropy: ln spectral radius of the alive graph.

    None when the graph carries no cycle (empty shift or finite orbit set of
    wandering walks only).  Absolute error at most ``tol``.
    """
    succ = s.successors()
    alive = s.alive()
    best: float | None = None
    for scc in _tarjan_sccs(succ, alive):
        members = set(scc)
        if not any(v in members for u in scc for v in succ[u]):
            continue
        h = _scc_spectral_log(sorted(members), succ, tol)
        if best is None or h > best:
            best = h
    return best


def sft_equivalent(a: Sft, b: Sft) -> bool:
    """Do the two presentations generate the same shift?

    Compares languages at the larger effective window, which pins equality at
    every length: points are window-local, so equal window-length languages
    force equal walks.  This agrees with comparing languages out to the sum
    of the two windows plus one.
    """
    if a.sided != b.sided:
        raise ValueError("cannot compare one-sided with two-sided shifts")
    if a.alphabet_size != b.alphabet_size:
        raise AlphabetMismatchError("shifts over different alphabet sizes")
    length = max(_effective_window(a), _effective_window(b))
    return sft_language(a, length) == sft_language(b, length)


def canonical_forbidden(s: Sft) -> tuple[int, frozenset[Word]]:
    """A forbidden-word presentation ``(depth, words)`` of ``s``.

    For a plain build this is the stored forbidden set with each word at its
    own length.  For explicit graphs it is the complement of the language at
    the effective window.
    """
    if s.explicit_vertices is None:
        return s.window, s.forbidden
    m = _effective_window(s)
    lang = sft_language(s, m)
    all_words = {
        decode_word(k, s.alphabet_size, m) for k in range(s.alphabet_size ** m)
    }
    return m, frozenset(all_words - lang)


def sft_dot(s: Sft) -> str:
    """Deterministic Graphviz rendering of the vertex graph."""
    lines = ["digraph sft {"]
    lines.append("  rankdir=LR;")
    for v in sorted(s.vertices()):
        lines.append(f'  "{word_str(v)}";')
    succ = s.successors()
    for u in sorted(succ):
        for v in succ[u]:
            lines.append(f'  "{word_str(u)}" -> "{word_str(v)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def sft_json_str(s: Sft) -> str:
    return json.dumps(s.to_json(), indent=2, sort_keys=True)
