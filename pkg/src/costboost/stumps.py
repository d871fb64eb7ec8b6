"""Decision stumps trained on weighted samples.

A stump thresholds a single feature: the prediction is ``polarity`` for
feature values strictly greater than ``threshold`` and ``-polarity``
otherwise. Training searches every feature, every midpoint between
consecutive distinct sorted values plus one threshold below the minimum
(so a feature can also cast a constant vote), and both polarities.

Ties are broken deterministically: lowest weighted error, then lowest
feature index, then lowest threshold, then polarity +1.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Stump",
    "ClassMasses",
    "train_stump",
    "stump_predict",
    "class_masses",
    "candidate_thresholds",
]


@dataclass(frozen=True)
class Stump:
    feature_index: int
    threshold: float
    polarity: int  # +1 or -1


@dataclass(frozen=True)
class ClassMasses:
    """Weight mass split by (class, correctness) for one stump.

    b_p / d_p: correctly / incorrectly classified positive mass;
    b_n / d_n: same for negatives. Sums to 1 for normalized weights.
    """

    b_p: float
    d_p: float
    b_n: float
    d_n: float

    def total(self) -> float:
        return self.b_p + self.d_p + self.b_n + self.d_n


def check_weights(weights) -> np.ndarray:
    """Validate a sample-weight vector; returns it as a float array."""
    weights = np.asarray(weights, dtype=float)
    if weights.ndim != 1 or weights.size == 0:
        raise ValueError("weights must be a nonempty 1-D array")
    if not np.all(np.isfinite(weights)):
        raise ValueError("weights contain non-finite entries")
    if np.any(weights < 0):
        raise ValueError("weights must be nonnegative")
    return weights


def _check_training_inputs(features, labels, weights, multiplier):
    features = np.asarray(features, dtype=float)
    if features.ndim != 2 or features.shape[0] == 0 or features.shape[1] == 0:
        raise ValueError("features must be a nonempty 2-D matrix")
    if not np.all(np.isfinite(features)):
        raise ValueError("features contain non-finite entries")
    labels = np.asarray(labels)
    if labels.shape != (features.shape[0],):
        raise ValueError("labels must have one entry per sample")
    if not np.all(np.isin(labels, (-1, 1))):
        raise ValueError("labels must be -1 or +1")
    weights = check_weights(weights)
    if weights.shape != labels.shape:
        raise ValueError("weights must have one entry per sample")
    if multiplier is not None:
        multiplier = np.asarray(multiplier, dtype=float)
        if multiplier.shape != labels.shape:
            raise ValueError("multiplier must have one entry per sample")
        if np.any(multiplier < 0) or not np.all(np.isfinite(multiplier)):
            raise ValueError("multiplier must be nonnegative and finite")
    return features, labels.astype(int), weights, multiplier


def candidate_thresholds(values) -> np.ndarray:
    """Threshold candidates for one feature column.

    Midpoints of consecutive distinct sorted values, preceded by one
    threshold below the minimum so the stump can vote constantly.
    """
    distinct = np.unique(np.asarray(values, dtype=float))
    mids = (distinct[:-1] + distinct[1:]) / 2.0
    return np.concatenate(([distinct[0] - 1.0], mids))


def _cut_tables(features, labels, mass):
    """Per-feature cumulative class masses at every cut position.

    Cut position b of a column splits its sorted values between index
    b-1 and b (b = 0 is the cut below the minimum). Returns the sorted
    value matrix ``xs`` and, per (position, feature): the positive and
    negative mass at or below the cut, the per-feature class totals, and
    the validity mask (a cut between equal values is not a candidate).
    All arrays have shape (n_samples, n_features) except the totals.
    """
    order = np.argsort(features, axis=0, kind="stable")
    xs = np.take_along_axis(features, order, axis=0)
    ms = mass[order]
    ys = labels[order]

    pos_cum = np.cumsum(np.where(ys > 0, ms, 0.0), axis=0)
    neg_cum = np.cumsum(np.where(ys < 0, ms, 0.0), axis=0)
    total_pos = pos_cum[-1]
    total_neg = neg_cum[-1]
    zeros = np.zeros((1, features.shape[1]))
    pos_below = np.concatenate((zeros, pos_cum[:-1]), axis=0)
    neg_below = np.concatenate((zeros, neg_cum[:-1]), axis=0)

    valid = np.concatenate(
        (np.ones((1, features.shape[1]), dtype=bool), xs[1:] > xs[:-1]), axis=0
    )
    return xs, pos_below, neg_below, total_pos, total_neg, valid


def _cut_threshold(xs, b, f) -> float:
    """Threshold realizing cut position b of feature f."""
    if b == 0:
        return float(xs[0, f] - 1.0)
    return float((xs[b - 1, f] + xs[b, f]) / 2.0)


def train_stump(features, labels, weights, per_sample_multiplier=None) -> Stump:
    """Exhaustively select the stump minimizing the weighted error.

    The objective is sum_i m_i * w_i * [h(x_i) != y_i] with m_i given by
    ``per_sample_multiplier`` (1 when omitted). The scan is one
    vectorized pass over all (cut, feature, polarity) candidates built
    from per-feature cumulative sums; deterministic for fixed inputs.
    """
    features, labels, weights, multiplier = _check_training_inputs(
        features, labels, weights, per_sample_multiplier
    )
    mass = weights if multiplier is None else weights * multiplier

    xs, pos_below, neg_below, total_pos, total_neg, valid = _cut_tables(
        features, labels, mass
    )
    # polarity +1 misclassifies positives at or below the cut and
    # negatives above it; polarity -1 misclassifies the complement
    err_plus = pos_below + (total_neg - neg_below)
    err_minus = neg_below + (total_pos - pos_below)
    errs = np.stack((err_plus, err_minus), axis=2)
    errs[~valid] = np.inf

    # axis order (feature, cut, polarity): the first row-major hit among
    # minima realizes the tie-break (error, feature, threshold, +1 first)
    by_feature = np.moveaxis(errs, 1, 0)
    f, b, pol = np.argwhere(by_feature == by_feature.min())[0]
    return Stump(
        feature_index=int(f),
        threshold=_cut_threshold(xs, int(b), int(f)),
        polarity=1 if pol == 0 else -1,
    )


def stump_predict(stump: Stump, features_row) -> int:
    """Predict one sample: polarity if value > threshold, else -polarity."""
    value = np.asarray(features_row, dtype=float)[stump.feature_index]
    return stump.polarity if value > stump.threshold else -stump.polarity


def predict_matrix(stump: Stump, features) -> np.ndarray:
    """Vectorized stump predictions (one +/-1 per row of ``features``)."""
    column = np.asarray(features, dtype=float)[:, stump.feature_index]
    return np.where(column > stump.threshold, stump.polarity, -stump.polarity)


def class_masses(stump: Stump, features, labels, weights) -> ClassMasses:
    """Partition the weight mass of a stump by (class, correctness)."""
    features = np.asarray(features, dtype=float)
    labels = np.asarray(labels)
    weights = check_weights(weights)
    pred = predict_matrix(stump, features)
    correct = pred == labels
    pos = labels > 0
    return ClassMasses(
        b_p=float(np.sum(weights[correct & pos])),
        d_p=float(np.sum(weights[~correct & pos])),
        b_n=float(np.sum(weights[correct & ~pos])),
        d_n=float(np.sum(weights[~correct & ~pos])),
    )
