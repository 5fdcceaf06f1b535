import random
from fractions import Fraction as F

import pytest

from exclusionlab import (
    SystemSpec,
    amalgamate_gaps,
    check_component_bound,
    forest_dot,
    hole1d_from_intervals,
    inner_sft,
    sft_components,
    sft_language,
    transitive_filtration,
)

CIRCLE = SystemSpec("circle", 2)


def dyadic_hole(rng, max_intervals=3, depth=6):
    den = 2**depth
    while True:
        pairs = []
        for _ in range(rng.randint(1, max_intervals)):
            a, b = rng.randrange(den + 1), rng.randrange(den + 1)
            if a == b:
                continue
            pairs.append((F(min(a, b), den), F(max(a, b), den)))
        if pairs:
            try:
                return hole1d_from_intervals(pairs)[0]
            except ValueError:
                continue


def test_two_component_hole():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(3, 4))])
    comps = sft_components(inner_sft(CIRCLE, hole, 2))
    assert len(comps) == 2
    # both components are single cycles: every vertex has one successor
    for c in comps:
        succ = c.successors()
        assert all(len(succ[v]) == 1 for v in c.alive())


def test_filtration_forest_parents():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(3, 4))])
    forest = transitive_filtration(CIRCLE, hole, 5)
    assert forest.depth == 5
    for d in range(1, 5):
        for node in forest.level(d):
            assert node.parent is not None
            pd, pi = node.parent
            assert pd == d + 1
            assert 0 <= pi < len(forest.level(pd))
    for node in forest.level(5):
        assert node.parent is None


def test_filtration_components_vertex_disjoint():
    rng = random.Random(11)
    for _ in range(6):
        hole = dyadic_hole(rng)
        forest = transitive_filtration(CIRCLE, hole, 5)
        for d in range(1, 6):
            seen = set()
            for node in forest.level(d):
                assert not (seen & set(node.vertices))
                seen.update(node.vertices)


def test_filtration_languages_grow():
    """Inner languages are non-decreasing across depths."""
    rng = random.Random(23)
    for _ in range(6):
        hole = dyadic_hole(rng)
        langs = [
            sft_language(inner_sft(CIRCLE, hole, d), 6) for d in (1, 2, 4, 6)
        ]
        for a, b in zip(langs, langs[1:]):
            assert a <= b


def test_amalgamate_gaps_two_interval_hole():
    # the gap (3/8, 1/2) doubles into (3/4, 1) c the hole, so it amalgamates
    hole, _ = hole1d_from_intervals([(F(3, 10), F(3, 8)), (F(1, 2), F(1))])
    report = amalgamate_gaps(CIRCLE, hole, 12)
    assert report.r_hat <= hole.interval_count
    by_start = {g.start: g for g in report.gaps}
    falls = by_start[F(3, 8)]
    assert falls.certified and falls.time == 1
    survives = by_start[F(1)]
    assert not survives.certified and survives.time is None


def test_check_component_bound_two_arc_hole():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(3, 4))])
    rep = check_component_bound(CIRCLE, hole, 12)
    assert rep.satisfied
    assert rep.bound == 4
    assert rep.countable == 2
    assert rep.uncountable == 0
    doc = rep.to_json()
    assert doc["bound"] == 4
    assert doc["satisfied"] is True


def test_bound_holds_on_random_holes():
    rng = random.Random(31)
    for _ in range(8):
        hole = dyadic_hole(rng, max_intervals=2)
        rep = check_component_bound(CIRCLE, hole, 10)
        assert rep.satisfied
        comps = sft_components(inner_sft(CIRCLE, hole, rep.depth))
        assert len(comps) <= rep.bound


def test_forest_dot_mentions_every_node():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(3, 4))])
    forest = transitive_filtration(CIRCLE, hole, 3)
    dot = forest_dot(forest)
    assert dot.startswith("digraph filtration {")
    for lvl in forest.levels:
        for node in lvl:
            assert f"d{node.depth}_c{node.index}" in dot


def test_depth_validation():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(1, 2))])
    with pytest.raises(ValueError):
        transitive_filtration(CIRCLE, hole, 0)
