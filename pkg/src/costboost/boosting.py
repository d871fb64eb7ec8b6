"""Plain AdaBoost and eleven cost-sensitive variants.

All algorithms share one training loop: initialize sample weights, then
repeat (select stump, compute its vote weight alpha, reweight samples,
normalize). They differ in where the cost pair enters:

* ADA   plain AdaBoost baseline (ignores costs).
* ABT   ADA plus an a-posteriori decision-threshold search on the
        training scores.
* ASB   per-round asymmetric pre-scaling of the weights, spread evenly
        over a fixed number of rounds, followed by a plain ADA round.
* ADC   cost-adjustment function inside both alpha and the weight
        update; alpha can go negative and is kept that way.
* CB0/CB1/CB2  multiplicative cost factor on the weights of mistakes,
        with no / a unit / the alpha-scaled exponential step.
* AC1/AC2/AC3  costs inside the error measure used for alpha, and in
        different places of the exponential update.
* CSA   joint stump/alpha selection by direct minimization of the
        class-separated exponential loss, costs in the exponents.
* CGA   cost-proportional weight initialization, then pure ADA rounds.

Error terms are clamped away from 0 and 1 (floor 1e-10) so alpha stays
finite; a round whose error term hits the clamp is flagged degenerate
but training continues with the clamped value.
"""

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .metrics import confusion_rates, classification_asymmetry, nec
from .stumps import ClassMasses, Stump, check_weights, predict_matrix, train_stump

__all__ = [
    "ALGORITHM_IDS",
    "CostPair",
    "StrongClassifier",
    "TrainingTrace",
    "RoundState",
    "RoundResult",
    "init_weights",
    "boost_round",
    "solve_csa_alpha",
    "csa_loss",
    "adjust_threshold",
    "train_ensemble",
    "predict_ensemble",
    "decision_scores",
]

ALGORITHM_IDS = (
    "ADA",
    "ABT",
    "ASB",
    "ADC",
    "CB0",
    "CB1",
    "CB2",
    "AC1",
    "AC2",
    "AC3",
    "CSA",
    "CGA",
)

_ERR_FLOOR = 1e-10
_MASS_FLOOR = 1e-10


@dataclass(frozen=True)
class CostPair:
    """Asymmetric cost specification: c_pos penalizes false negatives,
    c_neg false positives."""

    c_pos: float
    c_neg: float

    def __post_init__(self):
        for name in ("c_pos", "c_neg"):
            value = float(getattr(self, name))
            if not (np.isfinite(value) and value > 0):
                raise ValueError("costs must be strictly positive and finite")
            object.__setattr__(self, name, value)

    def per_sample(self, labels) -> np.ndarray:
        """Cost of misclassifying each sample: c_pos for +1, c_neg for -1."""
        return np.where(np.asarray(labels) > 0, self.c_pos, self.c_neg)


@dataclass
class StrongClassifier:
    stumps: list
    alphas: list
    decision_threshold: float = 0.0
    trained_rounds: int = 0
    effective_rounds: int = 0


@dataclass
class TrainingTrace:
    """Per-round record of one training run.

    ``train_nec`` and ``train_ca`` are measured on the training set with
    the ensemble truncated at each round (decision threshold 0);
    ``train_ca`` holds NaN where the asymmetry is undefined.
    """

    alphas: list = field(default_factory=list)
    zs: list = field(default_factory=list)
    train_nec: list = field(default_factory=list)
    train_ca: list = field(default_factory=list)
    round_wall_time: list = field(default_factory=list)
    degenerate_rounds: list = field(default_factory=list)

    def __len__(self):
        return len(self.alphas)


@dataclass
class RoundState:
    weights: np.ndarray
    round_index: int
    total_rounds: int


@dataclass
class RoundResult:
    stump: Stump
    alpha: float
    weights: np.ndarray
    z: float
    degenerate: bool = False


def _check_algorithm(algorithm):
    if algorithm not in ALGORITHM_IDS:
        raise ValueError(f"unknown algorithm {algorithm!r}")


def init_weights(algorithm, labels, costs: CostPair) -> np.ndarray:
    """Initial sample weights: cost-proportional for CGA, uniform else."""
    _check_algorithm(algorithm)
    labels = np.asarray(labels)
    if labels.size == 0:
        raise ValueError("labels must be nonempty")
    if algorithm == "CGA":
        raw = costs.per_sample(labels).astype(float)
        return raw / raw.sum()
    return np.full(labels.size, 1.0 / labels.size)


def _clamped_alpha_from_error(err):
    """AdaBoost vote weight with the error clamped into (0, 1)."""
    clamped = min(max(err, _ERR_FLOOR), 1.0 - _ERR_FLOOR)
    degenerate = clamped != err
    return 0.5 * np.log((1.0 - clamped) / clamped), degenerate


def _clamped_symmetric(value):
    """Clamp a correlation-style statistic into (-1, 1)."""
    clamped = min(max(value, -(1.0 - _ERR_FLOOR)), 1.0 - _ERR_FLOOR)
    return clamped, clamped != value


def csa_loss(alpha, masses: ClassMasses, costs: CostPair):
    """Class-separated exponential loss of a stump at vote weight alpha."""
    return (
        masses.b_p * np.exp(-alpha * costs.c_pos)
        + masses.d_p * np.exp(alpha * costs.c_pos)
        + masses.b_n * np.exp(-alpha * costs.c_neg)
        + masses.d_n * np.exp(alpha * costs.c_neg)
    )


def _floor_mass_groups(b_p, d_p, b_n, d_n):
    """Floor the correct-side and wrong-side masses away from zero.

    Each side of the loss needs positive total mass or the minimizer
    diverges; flooring whole sides (instead of every mass) leaves
    nonzero configurations untouched, so the equal-cost closed form
    stays exact.
    """
    b_zero = (b_p + b_n) <= 0.0
    d_zero = (d_p + d_n) <= 0.0
    floor = _MASS_FLOOR
    return (
        np.where(b_zero, floor, b_p),
        np.where(d_zero, floor, d_p),
        np.where(b_zero, floor, b_n),
        np.where(d_zero, floor, d_n),
    )


def _csa_alpha_arrays(b_p, d_p, b_n, d_n, costs: CostPair) -> np.ndarray:
    """Elementwise minimizer of the class-separated exponential loss.

    Strict convexity makes the derivative increasing, so the root is
    bracketed by doubling and then bisected to float resolution. Both
    mass sides must already be floored above zero.
    """
    c_p, c_n = costs.c_pos, costs.c_neg
    if c_p == c_n:
        return np.log((b_p + b_n) / (d_p + d_n)) / (2.0 * c_p)

    def _term(coef, exponent):
        # exact-zero coefficients must not turn exp overflow into NaN
        return np.where(coef > 0.0, coef * np.exp(exponent), 0.0)

    def dloss(a):
        return c_p * (_term(d_p, a * c_p) - _term(b_p, -a * c_p)) + c_n * (
            _term(d_n, a * c_n) - _term(b_n, -a * c_n)
        )

    lo = np.full_like(b_p, -1.0, dtype=float)
    hi = np.full_like(b_p, 1.0, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(64):
            moved = False
            g_lo = dloss(lo)
            push = g_lo > 0  # minimizer below lo
            if push.any():
                hi = np.where(push, lo, hi)
                lo = np.where(push, lo * 2.0, lo)
                moved = True
            g_hi = dloss(hi)
            push = g_hi < 0  # minimizer above hi
            if push.any():
                lo = np.where(push, hi, lo)
                hi = np.where(push, hi * 2.0, hi)
                moved = True
            if not moved:
                break
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            stuck = (mid == lo) | (mid == hi)
            if stuck.all():
                break
            g = dloss(mid)
            exact = g == 0.0
            hi = np.where(exact | (g > 0), mid, hi)
            lo = np.where(exact | (g < 0), mid, lo)
    return 0.5 * (lo + hi)


def solve_csa_alpha(masses: ClassMasses, costs: CostPair) -> float:
    """Vote weight minimizing the class-separated exponential loss.

    Mass sides that sum to zero are floored at 1e-10 so the loss keeps a
    finite minimizer. Equal costs reduce to the closed form
    ln((b_p+b_n)/(d_p+d_n)) / (2c), evaluated with the scalar libm log.
    """
    if min(masses.b_p, masses.d_p, masses.b_n, masses.d_n) < 0:
        raise ValueError("masses must be nonnegative")
    arrays = [
        np.asarray([m], dtype=float)
        for m in (masses.b_p, masses.d_p, masses.b_n, masses.d_n)
    ]
    b_p, d_p, b_n, d_n = _floor_mass_groups(*arrays)
    if costs.c_pos == costs.c_neg:
        ratio = float(b_p[0] + b_n[0]) / float(d_p[0] + d_n[0])
        return math.log(ratio) / (2.0 * costs.c_pos)
    return float(_csa_alpha_arrays(b_p, d_p, b_n, d_n, costs)[0])


def _csa_select(features, labels, weights, costs: CostPair):
    """Joint stump/alpha selection minimizing the per-round loss.

    For every candidate cut the class masses of polarity +1 are built
    from cumulative sums; the polarity -1 twin shares the optimal loss
    with the vote weight negated, so each pair is solved once. All
    features' candidates are solved in one flat batch. Ties break on
    (loss, plain weighted error, feature, threshold, polarity +1) -- the
    flat arrays are laid out in (feature, threshold) order, so the first
    index among tied candidates realizes that hierarchy.
    """
    from .stumps import _cut_tables, _cut_threshold  # shared cumulative machinery

    n_samples, n_features = features.shape
    xs, pos_below, neg_below, total_pos, total_neg, valid = _cut_tables(
        features, labels, weights
    )
    # flatten feature-major so flat index order is (feature, threshold)
    keep = np.flatnonzero(valid.T.ravel())
    cut_ids, feat_ids = keep % n_samples, keep // n_samples
    # polarity +1: positives at or below the cut are wrong, negatives
    # above it are wrong
    d_p = pos_below.T.ravel()[keep]
    b_p = total_pos[feat_ids] - d_p
    b_n = neg_below.T.ravel()[keep]
    d_n = total_neg[feat_ids] - b_n

    fb_p, fd_p, fb_n, fd_n = _floor_mass_groups(b_p, d_p, b_n, d_n)
    alphas = _csa_alpha_arrays(fb_p, fd_p, fb_n, fd_n, costs)
    losses = (
        fb_p * np.exp(-alphas * costs.c_pos)
        + fd_p * np.exp(alphas * costs.c_pos)
        + fb_n * np.exp(-alphas * costs.c_neg)
        + fd_n * np.exp(alphas * costs.c_neg)
    )
    err_plus = d_p + d_n
    err_minus = b_p + b_n

    candidates = np.flatnonzero(losses == losses.min())
    pair_err = np.minimum(err_plus[candidates], err_minus[candidates])
    j = candidates[np.flatnonzero(pair_err == pair_err.min())[0]]
    polarity = 1 if err_plus[j] <= err_minus[j] else -1
    alpha = float(alphas[j]) if polarity == 1 else -float(alphas[j])
    return (
        Stump(
            feature_index=int(feat_ids[j]),
            threshold=_cut_threshold(xs, int(cut_ids[j]), int(feat_ids[j])),
            polarity=polarity,
        ),
        alpha,
    )


def boost_round(algorithm, state: RoundState, features, labels, costs: CostPair) -> RoundResult:
    """One boosting round of the requested algorithm.

    Takes normalized weights, returns the selected stump, its vote weight
    alpha, the renormalized weights and the pre-normalization sum z. The
    degenerate flag marks rounds whose error term hit the clamp.
    """
    _check_algorithm(algorithm)
    features = np.asarray(features, dtype=float)
    labels = np.asarray(labels).astype(int)
    w = check_weights(state.weights)
    if not 1 <= state.round_index <= state.total_rounds:
        raise ValueError("round index out of range")
    c = costs.per_sample(labels).astype(float)

    if algorithm == "ASB":
        # spread ln(sqrt(C_P/C_N)) over the fixed round budget, then a
        # plain ADA round on the re-normalized weights
        k = costs.c_pos / costs.c_neg
        scaled = w * np.exp(labels * (np.log(np.sqrt(k)) / state.total_rounds))
        w = scaled / scaled.sum()

    if algorithm == "CSA":
        stump, alpha = _csa_select(features, labels, w, costs)
        pred = predict_matrix(stump, features)
        correct_mass = float(np.sum(w[pred == labels]))
        wrong_mass = float(np.sum(w[pred != labels]))
        degenerate = min(correct_mass, wrong_mass) <= _MASS_FLOOR
        unnorm = w * np.exp(-alpha * c * labels * pred)
        z = float(unnorm.sum())
        return RoundResult(stump, alpha, unnorm / z, z, degenerate)

    # the AdaC family defines its per-sample costs inside [0, 1]; rescaling
    # by the larger cost keeps the correlation statistics below 1 in
    # magnitude (and is exact at unit costs, where it divides by 1.0)
    c_norm = c / max(costs.c_pos, costs.c_neg)
    if algorithm in ("AC1", "AC2"):
        multiplier = c_norm
    elif algorithm == "AC3":
        multiplier = c_norm * c_norm
    else:
        multiplier = None
    stump = train_stump(features, labels, w, per_sample_multiplier=multiplier)
    pred = predict_matrix(stump, features)
    wrong = pred != labels
    agreement = (labels * pred).astype(float)  # +1 correct, -1 wrong

    if algorithm in ("ADA", "ABT", "ASB", "CGA"):
        err = float(np.sum(w[wrong]))
        alpha, degenerate = _clamped_alpha_from_error(err)
        unnorm = w * np.exp(-alpha * agreement)
    elif algorithm == "ADC":
        beta = np.where(wrong, 0.5 * (1.0 + c_norm), 0.5 * (1.0 - c_norm))
        r = float(np.sum(w * agreement * beta))
        r, degenerate = _clamped_symmetric(r)
        alpha = 0.5 * np.log((1.0 + r) / (1.0 - r))
        unnorm = w * np.exp(-alpha * agreement * beta)
    elif algorithm in ("CB0", "CB1", "CB2"):
        err = float(np.sum(w[wrong]))
        alpha, degenerate = _clamped_alpha_from_error(err)
        factor = np.where(wrong, c, 1.0)
        if algorithm == "CB0":
            unnorm = factor * w
        elif algorithm == "CB1":
            unnorm = factor * w * np.exp(-agreement)
        else:
            unnorm = factor * w * np.exp(-alpha * agreement)
    elif algorithm == "AC1":
        u = float(np.sum(c_norm * w * agreement))
        u, degenerate = _clamped_symmetric(u)
        alpha = 0.5 * np.log((1.0 + u) / (1.0 - u))
        unnorm = w * np.exp(-alpha * c_norm * agreement)
    elif algorithm == "AC2":
        cw = c_norm * w
        err_c = float(np.sum(cw[wrong])) / float(np.sum(cw))
        alpha, degenerate = _clamped_alpha_from_error(err_c)
        unnorm = cw * np.exp(-alpha * agreement)
    elif algorithm == "AC3":
        scale = float(np.sum(c_norm * w))
        v = float(np.sum(c_norm * c_norm * w * agreement)) / scale
        v, degenerate = _clamped_symmetric(v)
        alpha = 0.5 * np.log((1.0 + v) / (1.0 - v))
        unnorm = w * np.exp(-alpha * c_norm * agreement)
    else:  # pragma: no cover - guarded by _check_algorithm
        raise AssertionError(algorithm)

    z = float(unnorm.sum())
    return RoundResult(stump, float(alpha), unnorm / z, z, degenerate)


def adjust_threshold(scores, labels, costs: CostPair, prior_pos: float = 0.5) -> float:
    """Decision threshold minimizing the training NEC of sign(score - t).

    Candidates are the midpoints of consecutive distinct sorted scores
    plus one value below the minimum and one above the maximum. Ties
    break on smallest |t|, then smallest t.
    """
    scores = np.asarray(scores, dtype=float)
    labels = np.asarray(labels)
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    distinct = np.unique(scores)
    candidates = np.concatenate(
        ([distinct[0] - 1.0], (distinct[:-1] + distinct[1:]) / 2.0, [distinct[-1] + 1.0])
    )

    order = np.argsort(scores, kind="stable")
    sorted_scores = scores[order]
    sorted_pos = (labels[order] > 0).astype(float)
    n_pos = float(sorted_pos.sum())
    n_neg = float(labels.size - n_pos)
    if n_pos == 0 or n_neg == 0:
        raise ValueError("both classes must be present")
    pos_cum = np.concatenate(([0.0], np.cumsum(sorted_pos)))
    neg_cum = np.concatenate(([0.0], np.cumsum(1.0 - sorted_pos)))
    # prediction is +1 iff score >= t, so scores strictly below t are negatives
    below = np.searchsorted(sorted_scores, candidates, side="left")
    fn = pos_cum[below]
    fp = n_neg - neg_cum[below]

    from .metrics import pcf as _pcf

    p = _pcf(costs, prior_pos)
    necs = (fn / n_pos) * p + (fp / n_neg) * (1.0 - p)
    ties = np.flatnonzero(necs == necs.min())
    tied = candidates[ties]
    pick = ties[np.lexsort((tied, np.abs(tied)))[0]]
    return float(candidates[pick])


def train_ensemble(
    algorithm, features, labels, costs: CostPair, rounds: int, seed: int = 0
):
    """Train one boosted ensemble and return (classifier, trace).

    Deterministic given the inputs; ``seed`` is reserved for stochastic
    weak learners and unused by the exhaustive stump search. The trace
    stores per-round alpha, normalizer, training NEC and training
    classification asymmetry (NaN when undefined).
    """
    _check_algorithm(algorithm)
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    features = np.asarray(features, dtype=float)
    labels = np.asarray(labels).astype(int)

    weights = init_weights(algorithm, labels, costs)
    trace = TrainingTrace()
    stumps: list = []
    alphas: list = []
    score = np.zeros(labels.size)

    for t in range(1, rounds + 1):
        t0 = time.perf_counter()
        result = boost_round(
            algorithm,
            RoundState(weights=weights, round_index=t, total_rounds=rounds),
            features,
            labels,
            costs,
        )
        weights = result.weights
        stumps.append(result.stump)
        alphas.append(result.alpha)
        score += result.alpha * predict_matrix(result.stump, features)
        pred = np.where(score >= 0.0, 1, -1)
        rates = confusion_rates(pred, labels)
        ca = classification_asymmetry(rates)
        trace.alphas.append(result.alpha)
        trace.zs.append(result.z)
        trace.train_nec.append(nec(rates, costs, 0.5))
        trace.train_ca.append(float("nan") if ca is None else ca)
        trace.round_wall_time.append(time.perf_counter() - t0)
        if result.degenerate:
            trace.degenerate_rounds.append(t)

    threshold = adjust_threshold(score, labels, costs) if algorithm == "ABT" else 0.0
    classifier = StrongClassifier(
        stumps=stumps,
        alphas=alphas,
        decision_threshold=threshold,
        trained_rounds=rounds,
        effective_rounds=rounds,
    )
    return classifier, trace


def decision_scores(classifier: StrongClassifier, features, round_cutoff=None) -> np.ndarray:
    """Weighted-vote scores of the ensemble truncated at ``round_cutoff``."""
    cutoff = classifier.effective_rounds if round_cutoff is None else round_cutoff
    if not 0 <= cutoff <= classifier.trained_rounds:
        raise ValueError("cutoff out of range")
    features = np.asarray(features, dtype=float)
    score = np.zeros(features.shape[0])
    for stump, alpha in zip(classifier.stumps[:cutoff], classifier.alphas[:cutoff]):
        score += alpha * predict_matrix(stump, features)
    return score


def predict_ensemble(classifier: StrongClassifier, features_row, round_cutoff=None) -> int:
    """Sign of the truncated weighted vote minus the decision threshold;
    a zero margin counts as +1."""
    row = np.asarray(features_row, dtype=float).reshape(1, -1)
    score = decision_scores(classifier, row, round_cutoff)[0]
    return 1 if score - classifier.decision_threshold >= 0 else -1
