"""CART-style regression tree with mean-squared-error splits.

Split thresholds are midpoints between consecutive distinct feature
values; the split minimizing the size-weighted child MSE wins.  Nodes
below the minimum sample count stay leaves.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import TooFewSamples


@dataclass
class TreeNode:
    value: float
    samples: int
    mse: float
    feature: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None


class RegressionTree:

    def __init__(self, root: TreeNode, feature_names):
        self.root = root
        self.feature_names = list(feature_names)

    def predict(self, row) -> float:
        node = self.root
        while node.feature is not None:
            node = (node.left if row[node.feature] <= node.threshold
                    else node.right)
        return node.value

    def predict_many(self, rows) -> list:
        return [self.predict(row) for row in rows]

    def render(self) -> str:
        lines = []

        def walk(node, indent):
            pad = "  " * indent
            if node.feature is None:
                lines.append(
                    f"{pad}value={node.value:.4f}"
                    f"  (n={node.samples}, mse={node.mse:.4f})")
                return
            name = self.feature_names[node.feature]
            lines.append(
                f"{pad}{name} <= {node.threshold:g}"
                f"  (n={node.samples}, mse={node.mse:.4f})")
            walk(node.left, indent + 1)
            walk(node.right, indent + 1)

        walk(self.root, 0)
        return "\n".join(lines)


def _best_split(features, targets):
    n = len(targets)
    best = None
    for feature in range(features.shape[1]):
        column = features[:, feature]
        values = np.unique(column)
        for lo, hi in zip(values, values[1:]):
            threshold = float((lo + hi) / 2.0)
            mask = column <= threshold
            left = targets[mask]
            right = targets[~mask]
            score = (len(left) * float(left.var())
                     + len(right) * float(right.var())) / n
            key = (score, feature, threshold)
            if best is None or key < best:
                best = key
    return best


def _grow(features, targets, depth, max_depth, min_split) -> TreeNode:
    node = TreeNode(value=float(targets.mean()), samples=len(targets),
                    mse=float(targets.var()))
    if (depth >= max_depth or len(targets) < min_split
            or node.mse == 0.0):
        return node
    best = _best_split(features, targets)
    if best is None:
        return node
    score, feature, threshold = best
    if score >= node.mse - 1e-12:
        return node
    mask = features[:, feature] <= threshold
    node.feature = feature
    node.threshold = threshold
    node.left = _grow(features[mask], targets[mask], depth + 1,
                      max_depth, min_split)
    node.right = _grow(features[~mask], targets[~mask], depth + 1,
                       max_depth, min_split)
    return node


def fit_regression_tree(rows, targets, feature_names=None, max_depth=3,
                        min_split=10) -> RegressionTree:
    features = np.asarray(rows, dtype=float)
    values = np.asarray(targets, dtype=float)
    if features.ndim != 2:
        raise ValueError("rows must form a 2-d table")
    if values.ndim != 1 or len(values) != len(features):
        raise ValueError(
            f"length mismatch: {len(features)} rows vs "
            f"{len(values)} targets")
    if len(values) < min_split:
        raise TooFewSamples(
            f"need at least {min_split} samples to split, "
            f"got {len(values)}")
    if feature_names is None:
        names = [f"x{i}" for i in range(features.shape[1])]
    else:
        names = list(feature_names)
        if len(names) != features.shape[1]:
            raise ValueError("one name per feature column required")
    root = _grow(features, values, 0, max_depth, min_split)
    return RegressionTree(root, names)
