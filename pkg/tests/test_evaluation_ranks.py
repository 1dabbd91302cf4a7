"""Rank correlation checked against a stdlib-only oracle.

The oracle ranks by counting comparisons and feeds the ranks to
statistics.correlation, sharing nothing with the numpy implementation.
"""

import random
import statistics

import pytest

from reqlint.errors import DegenerateRange
from reqlint.evaluation import average_ranks, permutation_pvalue, spearman

TRIALS = 100
TOL = 1e-9


def oracle_ranks(values):
    ranks = []
    for v in values:
        below = sum(1 for u in values if u < v)
        equal = sum(1 for u in values if u == v)
        ranks.append(below + (equal + 1) / 2)
    return ranks


def oracle_spearman(x, y):
    return statistics.correlation(oracle_ranks(x), oracle_ranks(y))


def test_average_ranks_hand_case():
    assert average_ranks([10, 20, 20, 30]) == [1.0, 2.5, 2.5, 4.0]


def test_average_ranks_all_tied():
    assert average_ranks([5, 5, 5]) == [2.0, 2.0, 2.0]


def test_average_ranks_match_oracle():
    rng = random.Random(55)
    for _ in range(TRIALS):
        n = rng.randint(2, 200)
        # a small value grid forces plenty of ties
        values = [rng.randint(0, 12) for _ in range(n)]
        ours = average_ranks(values)
        theirs = oracle_ranks(values)
        assert all(a == pytest.approx(b, abs=TOL)
                   for a, b in zip(ours, theirs))


def test_spearman_matches_oracle():
    rng = random.Random(204)
    done = 0
    while done < TRIALS:
        n = rng.randint(3, 200)
        x = [rng.randint(0, 10) for _ in range(n)]
        y = [rng.randint(0, 10) for _ in range(n)]
        if len(set(x)) < 2 or len(set(y)) < 2:
            continue
        assert spearman(x, y) == pytest.approx(oracle_spearman(x, y),
                                               abs=TOL)
        done += 1


def test_spearman_perfect_monotone():
    x = [1, 2, 3, 4, 5]
    assert spearman(x, [10, 20, 30, 40, 50]) == pytest.approx(1.0)
    assert spearman(x, [50, 40, 30, 20, 10]) == pytest.approx(-1.0)


def test_spearman_is_symmetric():
    rng = random.Random(8)
    x = [rng.random() for _ in range(30)]
    y = [rng.random() for _ in range(30)]
    assert spearman(x, y) == pytest.approx(spearman(y, x), abs=TOL)


def test_spearman_invariant_to_monotone_transform():
    rng = random.Random(9)
    x = [rng.random() for _ in range(40)]
    y = [rng.random() for _ in range(40)]
    stretched = [3.0 * v ** 2 + 1.0 for v in y]
    assert spearman(x, stretched) == pytest.approx(spearman(x, y), abs=TOL)


def test_spearman_rejects_degenerate_input():
    with pytest.raises(DegenerateRange):
        spearman([1, 1, 1], [1, 2, 3])
    with pytest.raises(DegenerateRange):
        spearman([1, 2, 3], [7, 7, 7])


def test_spearman_rejects_bad_lengths():
    with pytest.raises(ValueError):
        spearman([1, 2], [1, 2, 3])
    with pytest.raises(ValueError):
        spearman([1], [2])


def test_permutation_pvalue_is_deterministic():
    rng = random.Random(31)
    x = [rng.random() for _ in range(25)]
    y = [rng.random() for _ in range(25)]
    a = permutation_pvalue(x, y, permutations=500, seed=3)
    b = permutation_pvalue(x, y, permutations=500, seed=3)
    assert a == b


def test_permutation_pvalue_bounds():
    rng = random.Random(32)
    x = [rng.random() for _ in range(20)]
    y = [rng.random() for _ in range(20)]
    p = permutation_pvalue(x, y, permutations=200, seed=0)
    assert 0.0 < p <= 1.0


def test_permutation_pvalue_detects_strong_signal():
    x = list(range(30))
    y = [2.0 * v + 0.1 for v in x]
    p = permutation_pvalue(x, y, permutations=999, seed=1)
    assert p < 0.01


def test_permutation_pvalue_accepts_noise():
    rng = random.Random(77)
    x = [rng.random() for _ in range(40)]
    y = [rng.random() for _ in range(40)]
    p = permutation_pvalue(x, y, permutations=999, seed=2)
    assert p > 0.05
