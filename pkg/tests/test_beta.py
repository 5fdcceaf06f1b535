"""Threshold (beta-style) subshifts, checked against an independent oracle.

The oracle computes greedy digits by exact iteration and applies the
classical admissibility rule: every suffix is lexicographically at most the
quasi-greedy expansion of the threshold (the greedy stream itself when the
expansion does not terminate, else the decremented last digit repeated).
"""

import itertools
from fractions import Fraction as F
from math import floor

import pytest

from exclusionlab import (
    FINITE_TYPE,
    NOT_SOFIC_WITHIN_HORIZON,
    SOFIC,
    BetaThreshold,
    SystemSpec,
    beta_code,
    beta_itinerary,
    beta_language,
    beta_res_hole,
    certify_stabilization,
    classify_beta_threshold,
    classify_digit_stream,
    expansion_length,
    inner_sft,
    is_beta_number,
    sft_language,
    verify_beta_res,
    word,
    Certificate,
    Unknown,
)


def greedy_digits(t, n, cap=64):
    x, digits = t, []
    for _ in range(cap):
        d = floor(x * n)
        digits.append(d)
        x = x * n - d
        if x == 0:
            return digits, True
    return digits, False


def quasi_stream(t, n, length):
    digits, terminates = greedy_digits(t, n)
    if terminates:
        per = tuple(digits[:-1]) + (digits[-1] - 1,)
        return tuple(per[i % len(per)] for i in range(length))
    return tuple(digits[:length])


def oracle_language(t, n, length):
    bound = quasi_stream(t, n, 2 * length)
    return frozenset(
        w
        for w in itertools.product(range(n), repeat=length)
        if all(w[k:] <= bound[: length - k] for k in range(length))
    )


THRESHOLDS = (F(3, 4), F(5, 6), F(13, 16), F(27, 32))


def test_threshold_validation():
    with pytest.raises(ValueError):
        BetaThreshold(F(0), 2)
    with pytest.raises(ValueError):
        BetaThreshold(F(3, 2), 2)


def test_is_beta_number():
    assert is_beta_number(BetaThreshold(F(3, 4), 2)) == (True, None)
    assert is_beta_number(BetaThreshold(F(5, 6), 2)) == (True, None)
    # 2/3 -> 1/3 -> 2/3 returns to the threshold at step 2
    assert is_beta_number(BetaThreshold(F(2, 3), 2)) == (False, 2)


def test_itinerary_matches_exact_iteration():
    for t in THRESHOLDS:
        bt = BetaThreshold(t, 2)
        digits, terminates = greedy_digits(t, 2)
        if terminates:
            digits = digits + [0] * (12 - len(digits))
        assert beta_code(bt, 12) == tuple(digits[:12])
    assert str(beta_itinerary(BetaThreshold(F(5, 6), 2))) == "1(10)"


def test_expansion_length():
    assert expansion_length(BetaThreshold(F(3, 4), 2)) == 2
    assert expansion_length(BetaThreshold(F(13, 16), 2)) == 4
    assert expansion_length(BetaThreshold(F(5, 6), 2)) is None


def test_classification():
    assert classify_beta_threshold(BetaThreshold(F(3, 4), 2))[0] == FINITE_TYPE
    assert classify_beta_threshold(BetaThreshold(F(13, 16), 2))[0] == FINITE_TYPE
    tag, evidence = classify_beta_threshold(BetaThreshold(F(5, 6), 2))
    assert tag == SOFIC
    assert evidence["period"] == 2


def test_classify_digit_stream():
    tag, evidence = classify_digit_stream((1, 1, 0, 0), 2)
    assert tag == NOT_SOFIC_WITHIN_HORIZON
    assert evidence == {"horizon": 4}
    with pytest.raises(ValueError):
        classify_digit_stream((2, 0), 2)


def test_language_matches_oracle():
    for t in THRESHOLDS:
        bt = BetaThreshold(t, 2)
        for length in (1, 2, 4, 6, 8):
            assert beta_language(bt, length) == oracle_language(t, 2, length)


def test_language_three_branches():
    t = F(7, 9)
    bt = BetaThreshold(t, 3)
    for length in (1, 3, 5):
        assert beta_language(bt, length) == oracle_language(t, 3, length)


def test_golden_mean_is_the_3_4_threshold_shift():
    from exclusionlab import sft_build

    bt = BetaThreshold(F(3, 4), 2)
    golden = sft_build(2, 2, {word("11")})
    for length in (2, 4, 6):
        assert beta_language(bt, length) == sft_language(golden, length)


def test_beta_res_hole_shape():
    bt = BetaThreshold(F(5, 6), 2)
    sys, hole = beta_res_hole(bt)
    assert sys.kind == "baker"
    assert all(r.full_height for r in hole.rects)


def test_finite_type_thresholds_stabilize():
    for t in (F(3, 4), F(13, 16)):
        bt = BetaThreshold(t, 2)
        sys, hole = beta_res_hole(bt)
        cert = certify_stabilization(sys, hole, expansion_length(bt) + 2)
        assert isinstance(cert, Certificate)
        assert cert.depth <= expansion_length(bt) + 2


def test_sofic_threshold_never_stabilizes_within_budget():
    bt = BetaThreshold(F(5, 6), 2)
    sys, hole = beta_res_hole(bt)
    assert isinstance(certify_stabilization(sys, hole, 12), Unknown)


def test_verify_beta_res():
    for t in THRESHOLDS:
        report = verify_beta_res(BetaThreshold(t, 2), 8)
        assert report.equal, f"language mismatch for t = {t}"
        assert report.max_length == 8
