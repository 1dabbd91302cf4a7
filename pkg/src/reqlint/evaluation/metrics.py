"""Detection-quality and score-error metrics."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class MatchCounts:
    """True positives, false positives and false negatives."""

    tp: int
    fp: int
    fn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} cannot be negative")

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        return MatchCounts(tp=self.tp + other.tp, fp=self.fp + other.fp,
                           fn=self.fn + other.fn)


@dataclass(frozen=True)
class PrfScores:
    """Precision, recall and F1 with degenerate-case flags.

    When nothing was predicted (or nothing annotated) the affected
    metric is 0 by convention and the matching flag is set, so report
    layers can tell a real zero from an empty column.
    """

    precision: float
    recall: float
    f1: float
    no_predictions: bool = False
    no_truth: bool = False


def precision_recall(counts: MatchCounts) -> PrfScores:
    predicted = counts.tp + counts.fp
    annotated = counts.tp + counts.fn
    precision = counts.tp / predicted if predicted else 0.0
    recall = counts.tp / annotated if annotated else 0.0
    f1 = (2 * precision * recall / (precision + recall)
          if precision + recall else 0.0)
    return PrfScores(precision=precision, recall=recall, f1=f1,
                     no_predictions=predicted == 0,
                     no_truth=annotated == 0)


def _paired(truth, predicted):
    t = np.asarray(truth, dtype=float)
    p = np.asarray(predicted, dtype=float)
    if t.ndim != 1 or p.ndim != 1:
        raise ValueError("expected flat sequences of numbers")
    if t.shape != p.shape:
        raise ValueError(
            f"length mismatch: {len(t)} truth vs {len(p)} predicted")
    if len(t) == 0:
        raise ValueError("cannot compute errors of empty sequences")
    return t, p


def mean_absolute_error(truth, predicted) -> float:
    t, p = _paired(truth, predicted)
    return float(np.mean(np.abs(t - p)))


def mean_squared_error(truth, predicted) -> float:
    t, p = _paired(truth, predicted)
    return float(np.mean((t - p) ** 2))


def root_mean_squared_error(truth, predicted) -> float:
    return float(np.sqrt(mean_squared_error(truth, predicted)))


def mean_squared_log_error(truth, predicted) -> float:
    """Mean squared difference of ln(1 + y), tolerant of small scores."""
    t, p = _paired(truth, predicted)
    if np.any(t <= -1.0) or np.any(p <= -1.0):
        raise ValueError("log error needs all values above -1")
    return float(np.mean((np.log1p(t) - np.log1p(p)) ** 2))


def median_absolute_error(truth, predicted) -> float:
    t, p = _paired(truth, predicted)
    return float(np.median(np.abs(t - p)))


@dataclass(frozen=True)
class ErrorSummary:
    mae: float
    mse: float
    rmse: float
    msle: float
    mdae: float


def error_summary(truth, predicted) -> ErrorSummary:
    return ErrorSummary(
        mae=mean_absolute_error(truth, predicted),
        mse=mean_squared_error(truth, predicted),
        rmse=root_mean_squared_error(truth, predicted),
        msle=mean_squared_log_error(truth, predicted),
        mdae=median_absolute_error(truth, predicted),
    )
