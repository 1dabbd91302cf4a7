"""Evaluation of detection quality and score fidelity."""

from .matching import aggregate_counts, canonical_term, match_record
from .metrics import (ErrorSummary, MatchCounts, PrfScores, error_summary,
                      mean_absolute_error, mean_squared_error,
                      mean_squared_log_error, median_absolute_error,
                      precision_recall, root_mean_squared_error)
from .ranks import average_ranks, permutation_pvalue, spearman
from .report import (DetectionReport, EvaluationReport, ScoreComparison,
                     compare_scores, evaluate, evaluate_detection,
                     ground_truth_score, smell_count_features)
from .tree import RegressionTree, TreeNode, fit_regression_tree

__all__ = [
    "aggregate_counts",
    "average_ranks",
    "canonical_term",
    "compare_scores",
    "DetectionReport",
    "ErrorSummary",
    "error_summary",
    "evaluate",
    "evaluate_detection",
    "EvaluationReport",
    "fit_regression_tree",
    "ground_truth_score",
    "match_record",
    "MatchCounts",
    "mean_absolute_error",
    "mean_squared_error",
    "mean_squared_log_error",
    "median_absolute_error",
    "permutation_pvalue",
    "precision_recall",
    "PrfScores",
    "RegressionTree",
    "root_mean_squared_error",
    "ScoreComparison",
    "smell_count_features",
    "spearman",
    "TreeNode",
]
