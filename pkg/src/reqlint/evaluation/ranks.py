"""Rank correlation with tie handling and a permutation test."""

import numpy as np

from ..errors import DegenerateRange


def average_ranks(values) -> list:
    """Ranks starting at 1; tied values share their average rank."""
    a = np.asarray(values, dtype=float)
    if a.ndim != 1 or len(a) == 0:
        raise ValueError("expected a non-empty flat sequence")
    order = np.argsort(a, kind="stable")
    ranks = np.empty(len(a), dtype=float)
    start = 0
    sorted_values = a[order]
    while start < len(a):
        stop = start
        while (stop + 1 < len(a)
               and sorted_values[stop + 1] == sorted_values[start]):
            stop += 1
        ranks[order[start:stop + 1]] = (start + stop) / 2 + 1
        start = stop + 1
    return [float(r) for r in ranks]


def _standardized_ranks(values):
    ranks = np.asarray(average_ranks(values))
    centered = ranks - ranks.mean()
    norm = float(np.linalg.norm(centered))
    if norm == 0.0:
        raise DegenerateRange("constant input has no rank order")
    return centered / norm


def spearman(x, y) -> float:
    """Rank correlation: Pearson correlation of the average ranks."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 2:
        raise ValueError("need at least two pairs")
    return float(_standardized_ranks(x) @ _standardized_ranks(y))


def permutation_pvalue(x, y, permutations: int = 2000,
                       seed: int = 0) -> float:
    """Two-sided permutation test on the rank correlation.

    One side's ranks are shuffled; the p-value is the add-one-smoothed
    share of permutations at least as extreme as the observed value.
    """
    if permutations < 1:
        raise ValueError("need at least one permutation")
    u = _standardized_ranks(x)
    v = _standardized_ranks(y)
    observed = abs(float(u @ v))
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    for _ in range(permutations):
        rho = float(u @ rng.permutation(v))
        if abs(rho) >= observed - 1e-12:
            hits += 1
    return (hits + 1) / (permutations + 1)
