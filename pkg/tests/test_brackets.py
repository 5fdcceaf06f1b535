import random
from fractions import Fraction as F

import pytest

from exclusionlab import (
    Certificate,
    Rect,
    SystemSpec,
    Unknown,
    bracket_report,
    certify_escape,
    certify_stabilization,
    hole_from_sft,
    hole1d_from_intervals,
    hole2d_from_rects,
    inner_sft,
    oracle_language,
    outer_sft,
    sft_build,
    sft_equivalent,
    sft_language,
    word,
)

CIRCLE = SystemSpec("circle", 2)
BAKER = SystemSpec("baker", 2)


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


def test_inner_outer_bracket_golden_mean():
    hole, _ = hole1d_from_intervals([(F(3, 4), F(1))])
    inner = inner_sft(CIRCLE, hole, 2)
    outer = outer_sft(CIRCLE, hole, 2)
    golden = sft_build(2, 2, {word("11")})
    assert sft_equivalent(inner, golden)
    assert sft_equivalent(outer, golden)


def test_bracket_report_checks_inclusion():
    hole, _ = hole1d_from_intervals([(F(1, 3), F(2, 3))])
    pair = bracket_report(CIRCLE, hole, 4)
    for length in (1, 2, 4):
        assert sft_language(pair.inner, length) <= sft_language(pair.outer, length)
    assert pair.inner_entropy is None or pair.outer_entropy is not None


def test_certify_stabilization_golden_mean():
    hole, _ = hole1d_from_intervals([(F(3, 4), F(1))])
    cert = certify_stabilization(CIRCLE, hole, 12)
    assert isinstance(cert, Certificate)
    assert cert.depth == 2
    assert cert.sft.forbidden == frozenset({(1, 1)})


def test_certify_stabilization_unknown_reports_budget():
    # an irrational-style hole: endpoints with odd denominators stabilize late
    hole, _ = hole1d_from_intervals([(F(1, 3), F(5, 12))])
    out = certify_stabilization(CIRCLE, hole, 3)
    assert isinstance(out, Unknown)
    assert dict(out.details)["n_max"] == "3"


def test_certificate_json_shape():
    hole, _ = hole1d_from_intervals([(F(3, 4), F(1))])
    doc = certify_stabilization(CIRCLE, hole, 12).to_json()
    assert doc["method"] == "stabilization"
    assert doc["depth"] == 2
    assert doc["forbidden"] == ["11"]


def test_escape_certificate_endpoints_enter():
    hole, _ = hole1d_from_intervals([(F(5, 16), F(11, 16))])
    cert = certify_escape(CIRCLE, hole, 12)
    assert isinstance(cert, Certificate)
    times = {w.x: w.time for w in cert.method.witnesses}
    assert times == {"5/16": 1, "11/16": 1}


def test_escape_unknown_when_boundary_never_falls():
    # 3/4 -> 1/2 -> 0 stays outside (3/4, 1) forever
    hole, _ = hole1d_from_intervals([(F(3, 4), F(1))])
    out = certify_escape(CIRCLE, hole, 12)
    assert isinstance(out, Unknown)
    assert "never enters" in out.reason


def test_escape_2d_center_square_unknown_but_stabilization_certifies():
    hole, _ = hole2d_from_rects([Rect((F(1, 4), F(3, 4)), (F(1, 4), F(3, 4)))])
    esc = certify_escape(BAKER, hole, 8)
    assert isinstance(esc, Unknown)
    stab = certify_stabilization(BAKER, hole, 8)
    assert isinstance(stab, Certificate)
    assert stab.depth == 2


def test_escape_2d_certificate_revalidates():
    """Find a sampled rect whose escape certifies, then re-check each witness
    by exact box iteration."""
    from exclusionlab.genericity import SplitMix64, _draw_rect
    from exclusionlab.regions import Box
    from exclusionlab.systems import backward_box_preimages, forward_box_images
    from exclusionlab.jsonio import parse_frac

    rng = SplitMix64(7)
    cert = None
    hole = None
    for _ in range(20):
        rect = _draw_rect(rng, 8)
        h, _ = hole2d_from_rects([rect])
        out = certify_escape(BAKER, h, 12)
        if isinstance(out, Certificate):
            cert, hole = out, h
            break
    assert cert is not None
    for w in cert.method.witnesses:
        if w.kind == "corner":
            boxes = [Box((parse_frac(w.x),) * 2, (parse_frac(w.y),) * 2)]
        elif isinstance(w.x, tuple):
            boxes = [Box((parse_frac(w.x[0]), parse_frac(w.x[1])), (parse_frac(w.y),) * 2)]
        else:
            boxes = [Box((parse_frac(w.x),) * 2, (parse_frac(w.y[0]), parse_frac(w.y[1])))]
        step = forward_box_images if w.time > 0 else backward_box_preimages
        for _ in range(abs(w.time)):
            boxes = [img for b in boxes for img in step(BAKER, b)]
        assert boxes
        assert all(hole.box_inside_open(b) for b in boxes)


def test_squeeze_inner_oracle_outer():
    """Inner language <= oracle language <= outer language, exactly."""
    rng = random.Random(5)
    for _ in range(12):
        hole = dyadic_hole(rng)
        for depth in (2, 4):
            inner = inner_sft(CIRCLE, hole, depth)
            outer = outer_sft(CIRCLE, hole, depth)
            for length in (depth, depth + 2):
                oracle = oracle_language(CIRCLE, hole, length)
                assert sft_language(inner, length) <= oracle
                assert oracle <= sft_language(outer, length)


def test_stabilized_brackets_agree_with_oracle():
    hole, _ = hole1d_from_intervals([(F(1, 2), F(3, 4))])
    cert = certify_stabilization(CIRCLE, hole, 12)
    assert isinstance(cert, Certificate)
    d = cert.depth
    for length in (d, d + 1, d + 3):
        lang = sft_language(cert.sft, length)
        assert lang == oracle_language(CIRCLE, hole, length)
        assert lang == sft_language(inner_sft(CIRCLE, hole, d), length)
        assert lang == sft_language(outer_sft(CIRCLE, hole, d), length)


def test_hole_from_sft_round_trip_one_sided():
    s = sft_build(2, 2, {word("11")})
    sys, hole = hole_from_sft(s)
    assert sys.kind == "circle"
    cert = certify_stabilization(sys, hole, 8)
    assert isinstance(cert, Certificate)
    assert sft_equivalent(cert.sft, s)


def test_hole_from_sft_round_trip_two_sided():
    s = sft_build(2, 2, {word("10")}, sided="two")
    sys, hole = hole_from_sft(s)
    assert sys.kind == "baker"
    assert hole.all_full_height
    cert = certify_stabilization(sys, hole, 8)
    assert isinstance(cert, Certificate)
    assert sft_equivalent(cert.sft, s)


def test_hole_from_sft_empty_forbidden():
    s = sft_build(2, 1, set())
    sys, hole = hole_from_sft(s)
    assert hole.is_empty()
    cert = certify_stabilization(sys, hole, 4)
    assert isinstance(cert, Certificate)
    assert sft_equivalent(cert.sft, s)


def test_2d_brackets_match_full_height_reduction():
    """A full-height strip constrains x alone, so the two-sided inner
    bracket's language equals the circle bracket's language."""
    strip, _ = hole2d_from_rects([Rect((F(3, 4), F(1)), (F(0), F(1)), full_height=True)])
    arc, _ = hole1d_from_intervals([(F(3, 4), F(1))])
    for depth in (1, 2, 3):
        two = inner_sft(BAKER, strip, depth)
        one = inner_sft(CIRCLE, arc, depth)
        assert sft_language(two, depth) == sft_language(one, depth)


def test_invalid_args():
    hole, _ = hole1d_from_intervals([(F(1, 4), F(1, 2))])
    with pytest.raises(ValueError):
        certify_stabilization(CIRCLE, hole, 0)
    with pytest.raises(ValueError):
        inner_sft(CIRCLE, hole, 0)
    with pytest.raises(ValueError):
        certify_escape(BAKER, hole, 4)
