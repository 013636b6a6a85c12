"""Gradient-boosted binary decision trees with Newton-style updates.

Binary logistic loss. Each round fits one regression tree to the current
gradients g = p - y and hessians h = p(1 - p); split gain is

    0.5 * (GL^2/(HL+lam) + GR^2/(HR+lam) - G^2/(H+lam))

maximized by exact greedy search over sorted feature values, with leaf
values -G/(H+lam). Trees grow leaf-wise: the leaf with the largest gain
splits first, until the leaf budget is reached or no split gains.

The value -1 is the imputation sentinel for unavailable features. Sentinel
rows never define thresholds; at each node they follow the recorded
default direction, which is the child that received the larger hessian
mass from threshold-routed rows (ties go left). The same routing applies
during training and prediction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.exceptions import NotFittedError

from ..features.assemble import IMPUTATION_SENTINEL, FeatureVector
from ..features.schema import FeatureSchema, SchemaMismatch
from .errors import SingleClassDataset


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class GbdtConfig:
    n_trees: int = 100
    learning_rate: float = 0.1
    max_leaves: int = 31
    min_samples_leaf: int = 20
    l2_lambda: float = 1.0
    seed: int = 42

    def validate(self) -> "GbdtConfig":
        if self.n_trees < 0:
            raise InvalidConfig("n_trees must be >= 0")
        if not 0.0 < self.learning_rate <= 1.0:
            raise InvalidConfig("learning_rate must be in (0, 1]")
        if self.max_leaves < 2:
            raise InvalidConfig("max_leaves must be >= 2")
        if self.min_samples_leaf < 1:
            raise InvalidConfig("min_samples_leaf must be >= 1")
        if self.l2_lambda < 0:
            raise InvalidConfig("l2_lambda must be >= 0")
        return self


@dataclass
class Tree:
    """Flat node arrays; node 0 is the root. Internal nodes have
    feature >= 0; leaves have feature == -1 and carry a value."""

    feature: list[int] = field(default_factory=list)
    threshold: list[float] = field(default_factory=list)
    left: list[int] = field(default_factory=list)
    right: list[int] = field(default_factory=list)
    default_left: list[bool] = field(default_factory=list)
    value: list[float] = field(default_factory=list)

    def add_leaf(self, value: float) -> int:
        self.feature.append(-1)
        self.threshold.append(0.0)
        self.left.append(-1)
        self.right.append(-1)
        self.default_left.append(True)
        self.value.append(float(value))
        return len(self.feature) - 1

    def to_split(self, node: int, feature: int, threshold: float,
                 left: int, right: int, default_left: bool) -> None:
        self.feature[node] = feature
        self.threshold[node] = float(threshold)
        self.left[node] = left
        self.right[node] = right
        self.default_left[node] = default_left
        self.value[node] = 0.0

    def n_leaves(self) -> int:
        return sum(1 for f in self.feature if f == -1)

    def predict_batch(self, X: np.ndarray) -> np.ndarray:
        """Leaf value per row; vectorized level-synchronous routing."""
        nodes = np.zeros(len(X), dtype=np.int64)
        feature = np.asarray(self.feature)
        threshold = np.asarray(self.threshold)
        left = np.asarray(self.left)
        right = np.asarray(self.right)
        default_left = np.asarray(self.default_left)
        value = np.asarray(self.value)
        active = feature[nodes] >= 0
        while active.any():
            idx = np.nonzero(active)[0]
            node_ids = nodes[idx]
            feats = feature[node_ids]
            vals = X[idx, feats]
            go_left = np.where(vals == IMPUTATION_SENTINEL,
                               default_left[node_ids],
                               vals <= threshold[node_ids])
            nodes[idx] = np.where(go_left, left[node_ids], right[node_ids])
            active[idx] = feature[nodes[idx]] >= 0
        return value[nodes]


@dataclass(frozen=True)
class GbdtModel:
    schema: FeatureSchema
    base_score: float
    learning_rate: float
    trees: tuple[Tree, ...]


@dataclass(frozen=True)
class _Split:
    gain: float
    feature: int
    threshold: float
    default_left: bool
    left_rows: np.ndarray
    right_rows: np.ndarray


def _sigmoid(z):
    return 1.0 / (1.0 + np.exp(-z))


def _leaf_value(g_sum: float, h_sum: float, lam: float) -> float:
    return -g_sum / (h_sum + lam)


def _score(g_sum, h_sum, lam):
    return g_sum * g_sum / (h_sum + lam)


def _best_split(X: np.ndarray, rows: np.ndarray, g: np.ndarray, h: np.ndarray,
                min_samples_leaf: int, lam: float) -> _Split | None:
    """Exact greedy search over all features and sorted distinct values.

    Ties on gain resolve to the lowest feature index, then the lowest
    threshold (guaranteed by scanning features and thresholds in ascending
    order with a strictly-greater comparison).
    """
    g_rows = g[rows]
    h_rows = h[rows]
    g_total = float(g_rows.sum())
    h_total = float(h_rows.sum())
    parent_score = _score(g_total, h_total, lam)
    best: _Split | None = None
    best_gain = 0.0

    for j in range(X.shape[1]):
        col = X[rows, j]
        routable = col != IMPUTATION_SENTINEL
        n_routable = int(routable.sum())
        if n_routable < 2:
            continue
        r_idx = np.nonzero(routable)[0]
        order = np.argsort(col[r_idx], kind="mergesort")
        sorted_idx = r_idx[order]
        sorted_vals = col[sorted_idx]
        if sorted_vals[0] == sorted_vals[-1]:
            continue
        g_sent = g_total - float(g_rows[r_idx].sum())
        h_sent = h_total - float(h_rows[r_idx].sum())
        n_sent = len(rows) - n_routable

        g_cum = np.cumsum(g_rows[sorted_idx])
        h_cum = np.cumsum(h_rows[sorted_idx])
        # candidate boundaries: between adjacent distinct values
        boundaries = np.nonzero(sorted_vals[:-1] != sorted_vals[1:])[0]
        gl = g_cum[boundaries]
        hl = h_cum[boundaries]
        gr = g_cum[-1] - gl
        hr = h_cum[-1] - hl
        sent_left = hl >= hr  # default side: larger routed hessian mass
        gl_full = np.where(sent_left, gl + g_sent, gl)
        hl_full = np.where(sent_left, hl + h_sent, hl)
        gr_full = np.where(sent_left, gr, gr + g_sent)
        hr_full = np.where(sent_left, hr, hr + h_sent)
        n_left = boundaries + 1 + np.where(sent_left, n_sent, 0)
        n_right = (len(rows) - n_sent - boundaries - 1
                   + np.where(sent_left, 0, n_sent))
        valid = (n_left >= min_samples_leaf) & (n_right >= min_samples_leaf)
        if not valid.any():
            continue
        gains = 0.5 * (_score(gl_full, hl_full, lam)
                       + _score(gr_full, hr_full, lam) - parent_score)
        gains = np.where(valid, gains, -np.inf)
        k = int(np.argmax(gains))
        gain = float(gains[k])
        if gain > best_gain:
            b = boundaries[k]
            threshold = float((sorted_vals[b] + sorted_vals[b + 1]) / 2.0)
            go_left = np.where(col == IMPUTATION_SENTINEL,
                               bool(sent_left[k]), col <= threshold)
            best = _Split(gain=gain, feature=j, threshold=threshold,
                          default_left=bool(sent_left[k]),
                          left_rows=rows[go_left], right_rows=rows[~go_left])
            best_gain = gain

    return best


def _fit_tree(X: np.ndarray, g: np.ndarray, h: np.ndarray,
              config: GbdtConfig) -> Tree:
    tree = Tree()
    all_rows = np.arange(len(X))
    root = tree.add_leaf(_leaf_value(float(g.sum()), float(h.sum()),
                                     config.l2_lambda))
    # candidate splits per open leaf, in leaf-creation order
    open_leaves: list[tuple[int, np.ndarray, _Split | None]] = [
        (root, all_rows,
         _best_split(X, all_rows, g, h, config.min_samples_leaf,
                     config.l2_lambda))]
    n_leaves = 1
    while n_leaves < config.max_leaves:
        # best positive-gain candidate; ties go to the earliest leaf
        pick = None
        for i, (_, _, split) in enumerate(open_leaves):
            if split is not None and (pick is None
                                      or split.gain > open_leaves[pick][2].gain):
                pick = i
        if pick is None:
            break
        node, _, split = open_leaves.pop(pick)
        lam = config.l2_lambda
        lv = _leaf_value(float(g[split.left_rows].sum()),
                         float(h[split.left_rows].sum()), lam)
        rv = _leaf_value(float(g[split.right_rows].sum()),
                         float(h[split.right_rows].sum()), lam)
        left = tree.add_leaf(lv)
        right = tree.add_leaf(rv)
        tree.to_split(node, split.feature, split.threshold, left, right,
                      split.default_left)
        open_leaves.append((left, split.left_rows,
                            _best_split(X, split.left_rows, g, h,
                                        config.min_samples_leaf, lam)))
        open_leaves.append((right, split.right_rows,
                            _best_split(X, split.right_rows, g, h,
                                        config.min_samples_leaf, lam)))
        n_leaves += 1
    return tree


def train_gbdt(X: np.ndarray, y: np.ndarray, schema: FeatureSchema,
               config: GbdtConfig | None = None) -> GbdtModel:
    """Fit the boosted ensemble on rows X (n x d) with 0/1 labels y."""
    config = (config or GbdtConfig()).validate()
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or len(X) != len(y):
        raise ValueError("X must be 2-D with one label per row")
    if X.shape[1] != len(schema):
        raise SchemaMismatch(
            f"X has {X.shape[1]} columns, schema has {len(schema)}")
    p_prior = float(y.mean())
    if p_prior <= 0.0 or p_prior >= 1.0:
        raise SingleClassDataset("training labels contain a single class")
    base_score = float(np.log(p_prior / (1.0 - p_prior)))
    margins = np.full(len(y), base_score)
    trees = []
    for _ in range(config.n_trees):
        p = _sigmoid(margins)
        g = p - y
        h = p * (1.0 - p)
        tree = _fit_tree(X, g, h, config)
        trees.append(tree)
        margins = margins + config.learning_rate * tree.predict_batch(X)
    return GbdtModel(schema=schema, base_score=base_score,
                     learning_rate=config.learning_rate, trees=tuple(trees))


def gbdt_margin_batch(model: GbdtModel, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.float64)
    margins = np.full(len(X), model.base_score)
    for tree in model.trees:
        margins = margins + model.learning_rate * tree.predict_batch(X)
    return margins


def gbdt_predict_batch(model: GbdtModel, X: np.ndarray) -> np.ndarray:
    """Positive-class probabilities for raw feature rows."""
    return _sigmoid(gbdt_margin_batch(model, X))


def gbdt_predict(model: GbdtModel, vector: FeatureVector) -> float:
    """Probability for one assembled vector; schema versions must match."""
    if vector.schema_version != model.schema.version:
        raise SchemaMismatch(
            f"vector schema {vector.schema_version} != model schema "
            f"{model.schema.version}")
    X = np.asarray([vector.values], dtype=np.float64)
    return float(gbdt_predict_batch(model, X)[0])


class GradientBoostedTreesClassifier(BaseEstimator, ClassifierMixin):
    """Estimator facade over the functional trainer.

    ``fit`` takes a numeric matrix and 0/1 labels (plus the schema the
    columns follow); ``predict_proba`` returns positive-class
    probabilities.
    """

    def __init__(self, n_trees: int = 100, learning_rate: float = 0.1,
                 max_leaves: int = 31, min_samples_leaf: int = 20,
                 l2_lambda: float = 1.0, seed: int = 42):
        self.n_trees = n_trees
        self.learning_rate = learning_rate
        self.max_leaves = max_leaves
        self.min_samples_leaf = min_samples_leaf
        self.l2_lambda = l2_lambda
        self.seed = seed

    def _config(self) -> GbdtConfig:
        return GbdtConfig(n_trees=self.n_trees,
                          learning_rate=self.learning_rate,
                          max_leaves=self.max_leaves,
                          min_samples_leaf=self.min_samples_leaf,
                          l2_lambda=self.l2_lambda, seed=self.seed)

    def fit(self, X, y, schema: FeatureSchema | None = None):
        if schema is None:
            raise ValueError("schema is required to fit")
        self.model_ = train_gbdt(X, y, schema, self._config())
        return self

    def _check_fitted(self):
        if not hasattr(self, "model_"):
            raise NotFittedError("GradientBoostedTreesClassifier is not fitted")

    def predict_proba(self, X) -> np.ndarray:
        self._check_fitted()
        return gbdt_predict_batch(self.model_, np.asarray(X, dtype=np.float64))

    def predict(self, X, threshold: float = 0.5) -> np.ndarray:
        return (self.predict_proba(X) >= threshold).astype(int)
