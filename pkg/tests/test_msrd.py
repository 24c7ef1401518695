"""MSRD generator matrices and the sum-rank metric."""

import pytest

from skewcode.errors import BadParams, BudgetExceeded, LengthMismatch
from skewcode.fields import make_tower
from skewcode.msrd import construct_msrd, min_sum_rank_bruteforce, sum_rank_weight
from skewcode.rng import CounterRng


def test_shape_and_partition():
    code = construct_msrd(3, 2, 2)
    assert code.n == 4
    assert code.M.rows == 2 and code.M.cols == 4
    assert code.partition == [(0, 2), (2, 4)]
    obj = code.to_json()
    assert obj["format_version"] == 1 and obj["k"] == 2


def test_meets_singleton_bound():
    for k in range(1, 5):
        code = construct_msrd(3, 2, k)
        assert min_sum_rank_bruteforce(code) == code.n - k + 1
    code = construct_msrd(2, 2, 1)
    assert min_sum_rank_bruteforce(code) == code.n - 1 + 1 == 2


def test_bad_params():
    with pytest.raises(BadParams):
        construct_msrd(3, 2, 5)  # k > n
    with pytest.raises(BadParams):
        construct_msrd(3, 2, 0)
    with pytest.raises(BadParams):
        construct_msrd(6, 2, 1)  # 6 is not a prime power


def test_budget_guard():
    code = construct_msrd(4, 3, 4)
    with pytest.raises(BudgetExceeded):
        min_sum_rank_bruteforce(code, limit=100)


def test_sum_rank_weight_basics():
    tw = make_tower(3, 1, 2)
    g = tw.generator
    parts = [(0, 2), (2, 4)]
    assert sum_rank_weight(tw, [0, 0, 0, 0], parts) == 0
    # a block spanned by one element over F_3 has rank 1
    assert sum_rank_weight(tw, [1, 2, 0, 0], parts) == 1
    assert sum_rank_weight(tw, [g, tw.mul(tw.embed(2), g), 0, 0], parts) == 1
    # independent coordinates give rank 2
    assert sum_rank_weight(tw, [1, g, 0, 0], parts) == 2
    assert sum_rank_weight(tw, [1, g, 1, g], parts) == 4
    with pytest.raises(LengthMismatch):
        sum_rank_weight(tw, [1, 2], parts)


def test_sum_rank_vs_hamming():
    # singleton parts make the sum-rank weight the Hamming weight, and in
    # general the sum-rank weight never exceeds the Hamming weight
    tw = make_tower(3, 1, 2)
    rng = CounterRng(77)
    singles = [(i, i + 1) for i in range(4)]
    pairs = [(0, 2), (2, 4)]
    for _ in range(200):
        v = [tw.random_element(rng) for _ in range(4)]
        ham = sum(1 for x in v if x)
        assert sum_rank_weight(tw, v, singles) == ham
        assert sum_rank_weight(tw, v, pairs) <= ham


def test_sum_rank_invariance():
    # scaling a whole block by a nonzero field element keeps its rank
    tw = make_tower(3, 1, 2)
    rng = CounterRng(78)
    parts = [(0, 2), (2, 4)]
    for _ in range(100):
        v = [tw.random_element(rng) for _ in range(4)]
        c = tw.random_nonzero(rng)
        w = [tw.mul(c, x) for x in v[:2]] + v[2:]
        assert sum_rank_weight(tw, v, parts) == sum_rank_weight(tw, w, parts)


def test_generator_rows_are_independent():
    for (q0, m, k) in [(3, 2, 3), (4, 2, 4), (5, 1, 3)]:
        code = construct_msrd(q0, m, k)
        assert code.M.rank() == k
