"""Metric kernels checked against independent brute-force oracles.

The oracles below use only the stdlib (fractions, math, statistics) and
plain loops, so they share no code path with the implementations.
"""

import math
import random
import statistics
from fractions import Fraction

import pytest

from reqlint.evaluation import (MatchCounts, error_summary,
                                mean_absolute_error, mean_squared_error,
                                mean_squared_log_error,
                                median_absolute_error, precision_recall,
                                root_mean_squared_error)

TRIALS = 100
TOL = 1e-9


# ---------------------------------------------------------------- oracles

def oracle_precision(tp, fp):
    return float(Fraction(tp, tp + fp)) if tp + fp else 0.0


def oracle_recall(tp, fn):
    return float(Fraction(tp, tp + fn)) if tp + fn else 0.0


def oracle_f1(tp, fp, fn):
    p = Fraction(tp, tp + fp) if tp + fp else Fraction(0)
    r = Fraction(tp, tp + fn) if tp + fn else Fraction(0)
    if p + r == 0:
        return 0.0
    return float(2 * p * r / (p + r))


def oracle_mae(truth, predicted):
    return sum(abs(t - p) for t, p in zip(truth, predicted)) / len(truth)


def oracle_mse(truth, predicted):
    return sum((t - p) ** 2 for t, p in zip(truth, predicted)) / len(truth)


def oracle_rmse(truth, predicted):
    return math.sqrt(oracle_mse(truth, predicted))


def oracle_msle(truth, predicted):
    return sum((math.log(1 + t) - math.log(1 + p)) ** 2
               for t, p in zip(truth, predicted)) / len(truth)


def oracle_mdae(truth, predicted):
    return statistics.median(abs(t - p)
                             for t, p in zip(truth, predicted))


# ------------------------------------------------------- randomized sweeps

def test_precision_recall_f1_match_oracle():
    rng = random.Random(1720)
    for _ in range(TRIALS):
        tp = rng.randint(0, 200)
        fp = rng.randint(0, 200)
        fn = rng.randint(0, 200)
        scores = precision_recall(MatchCounts(tp=tp, fp=fp, fn=fn))
        assert scores.precision == pytest.approx(
            oracle_precision(tp, fp), abs=TOL)
        assert scores.recall == pytest.approx(
            oracle_recall(tp, fn), abs=TOL)
        assert scores.f1 == pytest.approx(
            oracle_f1(tp, fp, fn), abs=TOL)


def test_error_metrics_match_oracle():
    rng = random.Random(92)
    for _ in range(TRIALS):
        n = rng.randint(1, 200)
        truth = [rng.random() for _ in range(n)]
        predicted = [rng.random() for _ in range(n)]
        assert mean_absolute_error(truth, predicted) == pytest.approx(
            oracle_mae(truth, predicted), abs=TOL)
        assert mean_squared_error(truth, predicted) == pytest.approx(
            oracle_mse(truth, predicted), abs=TOL)
        assert root_mean_squared_error(truth, predicted) == pytest.approx(
            oracle_rmse(truth, predicted), abs=TOL)
        assert mean_squared_log_error(truth, predicted) == pytest.approx(
            oracle_msle(truth, predicted), abs=TOL)
        assert median_absolute_error(truth, predicted) == pytest.approx(
            oracle_mdae(truth, predicted), abs=TOL)


def test_error_summary_collects_all_five():
    rng = random.Random(7)
    truth = [rng.random() for _ in range(40)]
    predicted = [rng.random() for _ in range(40)]
    summary = error_summary(truth, predicted)
    assert summary.mae == pytest.approx(oracle_mae(truth, predicted))
    assert summary.mse == pytest.approx(oracle_mse(truth, predicted))
    assert summary.rmse == pytest.approx(oracle_rmse(truth, predicted))
    assert summary.msle == pytest.approx(oracle_msle(truth, predicted))
    assert summary.mdae == pytest.approx(oracle_mdae(truth, predicted))


# ----------------------------------------------------------- edge cases

def test_zero_convention_and_flags():
    empty_both = precision_recall(MatchCounts(tp=0, fp=0, fn=0))
    assert empty_both.precision == 0.0
    assert empty_both.recall == 0.0
    assert empty_both.f1 == 0.0
    assert empty_both.no_predictions
    assert empty_both.no_truth

    no_pred = precision_recall(MatchCounts(tp=0, fp=0, fn=3))
    assert no_pred.no_predictions
    assert not no_pred.no_truth

    clean = precision_recall(MatchCounts(tp=3, fp=1, fn=2))
    assert not clean.no_predictions
    assert not clean.no_truth


def test_perfect_detection():
    scores = precision_recall(MatchCounts(tp=5, fp=0, fn=0))
    assert scores.precision == 1.0
    assert scores.recall == 1.0
    assert scores.f1 == 1.0


def test_counts_add():
    total = MatchCounts(1, 2, 3) + MatchCounts(4, 5, 6)
    assert (total.tp, total.fp, total.fn) == (5, 7, 9)


def test_negative_counts_rejected():
    with pytest.raises(ValueError):
        MatchCounts(tp=-1, fp=0, fn=0)


def test_identical_sequences_have_zero_error():
    values = [0.1, 0.5, 0.9]
    summary = error_summary(values, list(values))
    assert summary.mae == 0.0
    assert summary.mse == 0.0
    assert summary.rmse == 0.0
    assert summary.msle == 0.0
    assert summary.mdae == 0.0


def test_length_mismatch_rejected():
    with pytest.raises(ValueError):
        mean_absolute_error([1.0, 2.0], [1.0])


def test_empty_sequences_rejected():
    with pytest.raises(ValueError):
        mean_squared_error([], [])


def test_log_error_rejects_values_at_or_below_minus_one():
    with pytest.raises(ValueError):
        mean_squared_log_error([-1.0], [0.0])
    with pytest.raises(ValueError):
        mean_squared_log_error([0.0], [-1.5])


# --------------------------------------------- published-table consistency

# per-smell precision/recall pairs with their reported F1, to pin the
# harmonic-mean convention used throughout the reporting layer
REPORTED_PRF = [
    (0.3421, 0.4885, 0.4024),
    (0.4898, 0.3380, 0.4000),
    (0.2598, 0.2994, 0.2782),
    (0.3500, 0.8750, 0.5000),
    (0.4746, 0.8750, 0.6154),
    (0.2897, 0.9333, 0.4421),
    (0.1363, 0.6966, 0.2279),
    (0.7766, 0.9815, 0.8671),
    (0.6688, 0.8322, 0.7416),
]


@pytest.mark.parametrize("p,r,f1", REPORTED_PRF)
def test_f1_is_harmonic_mean_of_reported_pairs(p, r, f1):
    assert 2 * p * r / (p + r) == pytest.approx(f1, abs=5e-4)
