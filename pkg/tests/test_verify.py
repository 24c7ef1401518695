"""Erasure pattern machinery, the MR verifier, and the decoder."""

import math

import pytest

from skewcode.construct import LrcCode, construct_global_outside, construct_main
from skewcode.errors import (
    BudgetExceeded,
    InadmissiblePattern,
    NotACodeword,
    Uncorrectable,
)
from skewcode.rng import CounterRng
from skewcode.verify import (
    ErasurePattern,
    bruteforce_mr_check,
    check_pattern,
    decode_erasures,
    decode_with_stats,
    enumerate_patterns,
    is_admissible,
    is_maximally_recoverable,
    pattern_count,
)
from skewcode.construct import encode


def corrupted_azure():
    code = LrcCode.from_json(construct_main(14, 7, 2, 1).to_json())
    tw = code.tower
    code.H[2, 0] = tw.add(code.H[2, 0], 1)
    return code


def test_pattern_count_closed_form():
    code = construct_main(14, 7, 2, 1)
    assert pattern_count(code) == math.comb(7, 1) ** 2 * math.comb(12, 2)
    assert pattern_count(code) == 3234


def test_enumeration_matches_count():
    code = construct_main(8, 4, 2, 1)
    pats = list(enumerate_patterns(code))
    assert len(pats) == pattern_count(code)
    for pat in pats:
        assert is_admissible(code, pat.columns)
    # h_local cap filters patterns that overload a single group
    capped = list(enumerate_patterns(code, h_local=1))
    assert 0 < len(capped) < len(pats)
    for pat in capped:
        counts = [sum(1 for c in pat.columns if s <= c < e) for s, e in code.groups]
        assert all(cnt <= 1 + 1 for cnt in counts)


def test_is_admissible():
    code = construct_main(8, 4, 2, 1)
    assert is_admissible(code, (0, 1, 4, 5))
    assert not is_admissible(code, (0, 1, 2, 3))  # group 0 loses too many
    assert not is_admissible(code, (0, 4))  # wrong size
    assert not is_admissible(code, (0, 0, 4, 5))  # repeats
    assert not is_admissible(code, (0, 4, 5, 99))  # out of range


def test_check_pattern():
    code = construct_main(8, 4, 2, 1)
    assert check_pattern(code, ErasurePattern((0, 1, 4, 5)))
    assert check_pattern(code, (2, 3, 5, 6))
    with pytest.raises(InadmissiblePattern):
        check_pattern(code, (0, 1, 2, 3))


def test_exhaustive_certifies_azure():
    report = is_maximally_recoverable(construct_main(14, 7, 2, 1))
    assert report.certified
    assert report.patterns_checked == 3234
    assert report.mode == "exhaustive"
    assert report.to_json()["certified"] is True


def test_oracle_agreement():
    for code in [
        construct_main(8, 4, 2, 1),
        construct_main(12, 4, 1, 2),
        construct_global_outside(12, 5, 2, 1, case=1),
    ]:
        oracle = bruteforce_mr_check(code)
        report = is_maximally_recoverable(code)
        assert not oracle["failures"]
        assert report.certified
        assert len(oracle["admissible"]) > 0


def test_oracle_agreement_on_corruption():
    code = LrcCode.from_json(construct_main(8, 4, 2, 1).to_json())
    tw = code.tower
    code.H[2, 0] = tw.add(code.H[2, 0], 1)
    oracle = bruteforce_mr_check(code)
    report = is_maximally_recoverable(code, max_failures=10**9)
    oracle_fail = {f.columns for f in oracle["failures"]}
    struct_fail = {f.columns for f in report.failures}
    assert oracle_fail == struct_fail
    assert (not oracle_fail) == report.certified


def test_negative_control_single_entry():
    code = corrupted_azure()
    report = is_maximally_recoverable(code)
    assert not report.certified
    assert report.failures
    # every reported witness really is rank deficient
    for pat in report.failures:
        sub = code.H.submatrix_cols(sorted(pat.columns))
        assert sub.rank() < len(pat.columns)
        assert is_admissible(code, pat.columns)


def test_sampled_mode_deterministic():
    code = construct_main(14, 7, 2, 1)
    r1 = is_maximally_recoverable(code, mode="sampled", samples=500, seed=7)
    r2 = is_maximally_recoverable(code, mode="sampled", samples=500, seed=7)
    assert r1.patterns_checked == r2.patterns_checked == 500
    assert r1.certified and r2.certified
    assert r1.mode == r2.mode == "sampled(500,7)"


def test_sampled_mode_finds_corruption():
    report = is_maximally_recoverable(
        corrupted_azure(), mode="sampled", samples=3000, seed=1
    )
    assert not report.certified


def test_budget_exceeded():
    code = construct_main(30, 10, 3, 2)
    assert pattern_count(code) > 1000
    with pytest.raises(BudgetExceeded):
        is_maximally_recoverable(code, budget=1000)


def test_h_zero_verifies():
    code = construct_main(8, 4, 0, 2)
    report = is_maximally_recoverable(code)
    assert report.certified
    assert report.patterns_checked == math.comb(4, 2) ** 2


def test_decode_local_path():
    code = construct_main(14, 7, 2, 1)
    tw = code.tower
    p = code.params
    rng = CounterRng(91)
    k = p.n - code.H.rows
    for _ in range(40):
        word = encode(code, [tw.random_element(rng) for _ in range(k)])
        erased = {s + rng.randbelow(p.r) for s, _ in code.groups}
        rx = [None if i in erased else word[i] for i in range(p.n)]
        decoded, stats = decode_with_stats(code, rx)
        assert decoded == word
        assert stats["local"]
        for grp in stats["groups"]:
            assert grp["read"] <= p.r - p.a
        assert decode_erasures(code, rx) == word


def test_decode_global_path():
    code = construct_main(14, 7, 2, 1)
    tw = code.tower
    p = code.params
    rng = CounterRng(92)
    k = p.n - code.H.rows
    for pat in [(0, 1, 7, 8), (0, 1, 2, 7)]:
        assert is_admissible(code, pat)
        word = encode(code, [tw.random_element(rng) for _ in range(k)])
        rx = [None if i in pat else word[i] for i in range(p.n)]
        decoded, stats = decode_with_stats(code, rx)
        assert decoded == word
        assert not stats["local"]


def test_decode_no_erasures_and_errors():
    code = construct_main(8, 4, 2, 1)
    tw = code.tower
    word = encode(code, [1] * (code.params.n - code.H.rows))
    out, stats = decode_with_stats(code, list(word))
    assert out == word and stats["erased"] == 0
    bad = list(word)
    bad[0] = tw.add(bad[0], 1)
    with pytest.raises(NotACodeword):
        decode_with_stats(code, bad)
    # erasing more columns than the rank allows is uncorrectable
    rx = [None] * 5 + word[5:]
    with pytest.raises(Uncorrectable):
        decode_with_stats(code, rx)
    with pytest.raises(Uncorrectable):
        decode_with_stats(code, word[:-1])


def test_every_admissible_pattern_decodes():
    code = construct_main(8, 4, 2, 1)
    tw = code.tower
    p = code.params
    rng = CounterRng(93)
    k = p.n - code.H.rows
    word = encode(code, [tw.random_element(rng) for _ in range(k)])
    for pat in enumerate_patterns(code):
        rx = [None if i in pat.columns else word[i] for i in range(p.n)]
        assert decode_erasures(code, rx) == word


def test_subpatterns_also_decode():
    # fewer erasures than the full admissible budget are still correctable
    code = construct_main(8, 4, 2, 1)
    tw = code.tower
    p = code.params
    rng = CounterRng(94)
    k = p.n - code.H.rows
    word = encode(code, [tw.random_element(rng) for _ in range(k)])
    for pat in enumerate_patterns(code):
        cols = list(pat.columns)
        sub = [cols[i] for i in rng.sample(len(cols), rng.randbelow(len(cols)))]
        assert code.H.submatrix_cols(sorted(sub)).rank() == len(sub)
        rx = [None if i in set(sub) else word[i] for i in range(p.n)]
        assert decode_erasures(code, rx) == word


def test_report_json_shape():
    report = is_maximally_recoverable(corrupted_azure())
    obj = report.to_json()
    assert obj["certified"] is False
    assert obj["failures"]
    assert all(isinstance(f, list) for f in obj["failures"])
    assert "elapsed_seconds" in obj and "patterns_checked" in obj
