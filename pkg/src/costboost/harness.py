"""Benchmark harness: sweeps, convergence cutoff, persistence, reports.

A sweep trains every (dataset, algorithm, cost, fold) cell, truncates
each classifier at the earliest round where the training-NEC tail has
settled, evaluates the confusion rates on the held-out fold and collects
one record per cell plus one fold-averaged record per (dataset,
algorithm, cost). Datasets built from the normal-mixture generator also
receive reference rows from the cost-optimal rule evaluated on the whole
set ("BAY" rows, fold label "all").

Everything written to a run directory is byte-deterministic for a fixed
config and seed, independent of worker count, with one deliberate
exception: wall-clock training times live in their own ``timing.csv``
because they can never be reproducible.
"""

import json
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .boosting import (
    ALGORITHM_IDS,
    CostPair,
    adjust_threshold,
    decision_scores,
    train_ensemble,
)
from .datasets import (
    Dataset,
    bayes_optimal_predict,
    gen_bayes,
    gen_two_clouds,
    load_csv_balanced,
    stratified_kfold,
)
from .metrics import (
    ConfusionRates,
    ResultRecord,
    confusion_rates,
    nec,
)

__all__ = [
    "DEFAULT_COST_GRID",
    "DatasetSpec",
    "ExperimentConfig",
    "RunStore",
    "detect_convergence",
    "run_experiment",
    "emit_report",
]

# the cost sweep used by default: heavy penalties on false negatives at
# one end, on false positives at the other, symmetric in the middle
DEFAULT_COST_GRID = (
    (1, 100), (1, 50), (1, 25), (1, 10), (1, 7), (1, 5), (1, 3), (1, 2),
    (2, 3), (1, 1), (3, 2), (2, 1), (3, 1), (5, 1), (7, 1), (10, 1),
    (25, 1), (50, 1), (100, 1),
)

REPORT_KINDS = ("appendix_tables", "delta_global", "delta_by_cost", "ca_surface", "timing")

AVG_FOLD = "AVG"
ALL_FOLD = "all"
BAYES_REFERENCE = "BAY"


@dataclass(frozen=True)
class DatasetSpec:
    """One dataset entry of a config: a generator spec or a CSV path."""

    kind: str  # "bayes" | "twoclouds" | "csv"
    name: str = ""
    n_pos: int = 0
    n_neg: int = 0
    path: str = ""
    label_column: str = ""
    positive_label: str = ""
    rounds: int = 0  # per-dataset override; 0 = use the global setting

    def __post_init__(self):
        if self.kind not in ("bayes", "twoclouds", "csv"):
            raise ValueError(f"unknown dataset kind {self.kind!r}")
        if self.kind in ("bayes", "twoclouds") and (self.n_pos <= 0 or self.n_neg <= 0):
            raise ValueError("generator specs need positive class counts")
        if self.kind == "csv" and not self.path:
            raise ValueError("csv specs need a path")

    def resolved_name(self) -> str:
        if self.name:
            return self.name
        if self.kind == "csv":
            return Path(self.path).stem
        return self.kind


@dataclass(frozen=True)
class ConvergenceSettings:
    tol: float = 1e-3
    tail_fraction: float = 0.1
    statistic: str = "max-abs"  # or "mean-abs" / "std"
    enabled_per_algorithm: tuple = ()  # (algorithm, bool) pairs

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if not 0.0 < self.tail_fraction < 1.0:
            raise ValueError("tail_fraction must lie in (0, 1)")
        if self.statistic not in ("max-abs", "mean-abs", "std"):
            raise ValueError(f"unknown deviation statistic {self.statistic!r}")

    def enabled_for(self, algorithm: str) -> bool:
        # ASB classifiers are never truncated: their asymmetry budget is
        # spread over the full round count, so pruning rounds would change
        # the loss actually minimized.
        if algorithm == "ASB":
            return False
        return dict(self.enabled_per_algorithm).get(algorithm, True)


@dataclass(frozen=True)
class ExperimentConfig:
    datasets: tuple
    algorithms: tuple = ALGORITHM_IDS
    costs: tuple = DEFAULT_COST_GRID
    folds: int = 3
    rounds: str = "dataset-size"  # or a positive integer
    seed: int = 0
    convergence: ConvergenceSettings = field(default_factory=ConvergenceSettings)

    def __post_init__(self):
        if not self.datasets or not self.algorithms or not self.costs:
            raise ValueError("datasets, algorithms and costs must be nonempty")
        names = [spec.resolved_name() for spec in self.datasets]
        if len(set(names)) != len(names):
            raise ValueError("dataset names must be unique")
        for algorithm in self.algorithms:
            if algorithm not in ALGORITHM_IDS:
                raise ValueError(f"unknown algorithm {algorithm!r}")
        if self.folds < 2:
            raise ValueError("folds must be >= 2")
        if self.rounds != "dataset-size" and (
            not isinstance(self.rounds, int) or self.rounds < 1
        ):
            raise ValueError("rounds must be 'dataset-size' or a positive integer")

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        datasets = tuple(DatasetSpec(**spec) for spec in raw["datasets"])
        convergence = raw.get("convergence", {})
        enabled = tuple(sorted(convergence.get("enabled_per_algorithm", {}).items()))
        return cls(
            datasets=datasets,
            algorithms=tuple(raw.get("algorithms", ALGORITHM_IDS)),
            costs=tuple((c[0], c[1]) for c in raw.get("costs", DEFAULT_COST_GRID)),
            folds=int(raw.get("folds", 3)),
            rounds=raw.get("rounds", "dataset-size"),
            seed=int(raw.get("seed", 0)),
            convergence=ConvergenceSettings(
                tol=float(convergence.get("tol", 1e-3)),
                tail_fraction=float(convergence.get("tail_fraction", 0.1)),
                statistic=convergence.get("statistic", "max-abs"),
                enabled_per_algorithm=enabled,
            ),
        )

    @classmethod
    def from_json(cls, path) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as handle:
            return cls.from_dict(json.load(handle))

    def to_dict(self) -> dict:
        return {
            "datasets": [
                {k: v for k, v in vars(spec).items() if v not in ("", 0) or k == "kind"}
                for spec in self.datasets
            ],
            "algorithms": list(self.algorithms),
            "costs": [list(c) for c in self.costs],
            "folds": self.folds,
            "rounds": self.rounds,
            "seed": self.seed,
            "convergence": {
                "tol": self.convergence.tol,
                "tail_fraction": self.convergence.tail_fraction,
                "statistic": self.convergence.statistic,
                "enabled_per_algorithm": dict(self.convergence.enabled_per_algorithm),
            },
        }


@dataclass
class CellFailure:
    dataset: str
    algorithm: str
    cost: CostPair
    fold: str
    message: str


@dataclass
class RunStore:
    """In-memory result of one sweep, mirrored on disk by save()/load()."""

    records: list = field(default_factory=list)
    traces: dict = field(default_factory=dict)  # (dataset, alg, c_pos, c_neg, fold) -> rows
    failures: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    environment: dict = field(default_factory=dict)

    # -- persistence ----------------------------------------------------

    def save(self, out_dir) -> Path:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "records.csv", "w", encoding="utf-8", newline="\n") as handle:
            handle.write(
                "dataset,algorithm,c_pos,c_neg,fold,fnr,fpr,ce,nec,"
                "effective_rounds,trained_rounds\n"
            )
            for rec in sorted(self.records, key=_record_sort_key):
                handle.write(
                    f"{rec.dataset},{rec.algorithm},{rec.cost.c_pos!r},{rec.cost.c_neg!r},"
                    f"{rec.fold},{rec.rates.fnr!r},{rec.rates.fpr!r},{rec.rates.ce!r},"
                    f"{rec.nec!r},{rec.effective_rounds},{rec.trained_rounds}\n"
                )
        # wall-clock seconds are inherently non-reproducible, so they are
        # quarantined here instead of the deterministic records file
        with open(out / "timing.csv", "w", encoding="utf-8", newline="\n") as handle:
            handle.write("dataset,algorithm,c_pos,c_neg,fold,train_seconds\n")
            for rec in sorted(self.records, key=_record_sort_key):
                if rec.fold == ALL_FOLD:
                    continue
                handle.write(
                    f"{rec.dataset},{rec.algorithm},{rec.cost.c_pos!r},{rec.cost.c_neg!r},"
                    f"{rec.fold},{rec.train_seconds!r}\n"
                )
        traces_dir = out / "traces"
        traces_dir.mkdir(exist_ok=True)
        for key in sorted(self.traces):
            dataset, algorithm, c_pos, c_neg, fold = key
            fname = f"{dataset}__{algorithm}__cp{c_pos}_cn{c_neg}__fold{fold}.csv"
            with open(traces_dir / fname, "w", encoding="utf-8", newline="\n") as handle:
                handle.write("round,alpha,z,train_nec,train_ca\n")
                for row in self.traces[key]:
                    handle.write(
                        f"{row[0]},{row[1]!r},{row[2]!r},{row[3]!r},{row[4]!r}\n"
                    )
        if self.failures:
            with open(out / "failures.csv", "w", encoding="utf-8", newline="\n") as handle:
                handle.write("dataset,algorithm,c_pos,c_neg,fold,message\n")
                for failure in sorted(
                    self.failures, key=lambda f: (f.dataset, f.algorithm, f.cost.c_pos,
                                                  f.cost.c_neg, str(f.fold))
                ):
                    msg = failure.message.replace("\n", " ").replace(",", ";")
                    handle.write(
                        f"{failure.dataset},{failure.algorithm},{failure.cost.c_pos!r},"
                        f"{failure.cost.c_neg!r},{failure.fold},{msg}\n"
                    )
        with open(out / "metadata.json", "w", encoding="utf-8", newline="\n") as handle:
            json.dump(
                {"config": self.config, "environment": self.environment},
                handle,
                indent=2,
                sort_keys=True,
            )
            handle.write("\n")
        return out

    @classmethod
    def load(cls, run_dir) -> "RunStore":
        run_dir = Path(run_dir)
        store = cls()
        with open(run_dir / "metadata.json", encoding="utf-8") as handle:
            meta = json.load(handle)
        store.config = meta.get("config", {})
        store.environment = meta.get("environment", {})

        timing = {}
        timing_path = run_dir / "timing.csv"
        if timing_path.exists():
            for parts in _read_csv_rows(timing_path):
                timing[(parts[0], parts[1], parts[2], parts[3], parts[4])] = float(parts[5])

        for parts in _read_csv_rows(run_dir / "records.csv"):
            dataset, algorithm, c_pos, c_neg, fold = parts[:5]
            fnr, fpr, ce, rec_nec = (float(v) for v in parts[5:9])
            store.records.append(
                ResultRecord(
                    algorithm=algorithm,
                    dataset=dataset,
                    cost=CostPair(float(c_pos), float(c_neg)),
                    fold=fold,
                    rates=ConfusionRates(fnr=fnr, fpr=fpr, ce=ce),
                    nec=rec_nec,
                    train_seconds=timing.get((dataset, algorithm, c_pos, c_neg, fold), 0.0),
                    effective_rounds=int(parts[9]),
                    trained_rounds=int(parts[10]),
                )
            )

        traces_dir = run_dir / "traces"
        if traces_dir.exists():
            for path in sorted(traces_dir.glob("*.csv")):
                stem = path.stem
                dataset, algorithm, costs_part, fold_part = stem.split("__")
                c_pos, c_neg = costs_part[2:].split("_cn")
                fold = fold_part[len("fold"):]
                rows = []
                for parts in _read_csv_rows(path):
                    rows.append(
                        (int(parts[0]), float(parts[1]), float(parts[2]),
                         float(parts[3]), float(parts[4]))
                    )
                store.traces[(dataset, algorithm, c_pos, c_neg, fold)] = rows
        return store


def _read_csv_rows(path):
    with open(path, encoding="utf-8") as handle:
        next(handle)  # header
        for line in handle:
            line = line.rstrip("\n")
            if line:
                yield line.split(",")


def _fold_order(fold: str) -> tuple:
    if fold == AVG_FOLD:
        return (1, 0)
    if fold == ALL_FOLD:
        return (2, 0)
    return (0, int(fold))


def _record_sort_key(rec: ResultRecord) -> tuple:
    return (rec.dataset, rec.algorithm, rec.cost.c_pos, rec.cost.c_neg,
            _fold_order(rec.fold))


def detect_convergence(nec_trace, tol: float = 1e-3, tail_fraction: float = 0.1,
                       statistic: str = "max-abs"):
    """Earliest cutoff round after which the NEC tail has settled.

    Returns the smallest k < K such that the deviation of rounds k+1..K
    about their own mean stays below ``tol`` while the tail keeps at
    least ``tail_fraction`` of the K rounds; None when no round
    qualifies. The deviation statistic defaults to the maximum absolute
    deviation.
    """
    trace = np.asarray(nec_trace, dtype=float)
    k_total = trace.size
    if k_total < 2:
        return None
    rev = trace[::-1]
    suffix_mean = (np.cumsum(rev) / np.arange(1, k_total + 1))[::-1]
    if statistic == "max-abs":
        suffix_max = np.maximum.accumulate(rev)[::-1]
        suffix_min = np.minimum.accumulate(rev)[::-1]
        deviation = np.maximum(suffix_max - suffix_mean, suffix_mean - suffix_min)
    elif statistic == "mean-abs":
        deviation = np.array(
            [np.mean(np.abs(trace[k:] - suffix_mean[k])) for k in range(k_total)]
        )
    else:  # std
        deviation = np.array([np.std(trace[k:]) for k in range(k_total)])

    for k in range(1, k_total):
        if (k_total - k) < tail_fraction * k_total:
            break  # tails only shrink from here
        if deviation[k] < tol:  # deviation over rounds k+1..K is index k
            return k
    return None


def _environment_fingerprint() -> dict:
    return {
        "costboost": __version__,
        "python": sys.version.split()[0],
        "numpy": np.__version__,
        "platform": platform.platform(),
    }


def _derived_seed(*parts) -> int:
    return int(np.random.SeedSequence(list(parts)).generate_state(1)[0])


def _build_dataset(spec: DatasetSpec, seed: int, index: int) -> Dataset:
    gen_seed = _derived_seed(seed, index, 0)
    if spec.kind == "bayes":
        return gen_bayes(spec.n_pos, spec.n_neg, seed=gen_seed, name=spec.resolved_name())
    if spec.kind == "twoclouds":
        return gen_two_clouds(spec.n_pos, spec.n_neg, seed=gen_seed,
                              name=spec.resolved_name())
    data = load_csv_balanced(spec.path, spec.label_column, spec.positive_label,
                             seed=gen_seed)
    data.name = spec.resolved_name()
    return data


def _resolve_rounds(config: ExperimentConfig, spec: DatasetSpec, data: Dataset) -> int:
    if spec.rounds:
        return spec.rounds
    if config.rounds == "dataset-size":
        return data.n_samples
    return config.rounds


def _run_cell(algorithm, data, fold_of, fold, cost, rounds, convergence):
    """Train, truncate and evaluate one sweep cell; returns record + trace."""
    train_idx = np.flatnonzero(fold_of != fold)
    test_idx = np.flatnonzero(fold_of == fold)
    x_train, y_train = data.features[train_idx], data.labels[train_idx]

    start = time.perf_counter()
    classifier, trace = train_ensemble(algorithm, x_train, y_train, cost, rounds)
    elapsed = time.perf_counter() - start

    cutoff = None
    if convergence.enabled_for(algorithm):
        cutoff = detect_convergence(
            trace.train_nec, convergence.tol, convergence.tail_fraction,
            convergence.statistic,
        )
    if cutoff is not None:
        classifier.effective_rounds = cutoff
        if algorithm == "ABT" and cutoff < classifier.trained_rounds:
            # the a-posteriori threshold must match the classifier that is
            # actually evaluated, so redo the search on the truncated scores
            truncated = decision_scores(classifier, x_train, cutoff)
            classifier.decision_threshold = adjust_threshold(truncated, y_train, cost)

    scores = decision_scores(classifier, data.features[test_idx])
    pred = np.where(scores - classifier.decision_threshold >= 0, 1, -1)
    rates = confusion_rates(pred, data.labels[test_idx])
    record = ResultRecord(
        algorithm=algorithm,
        dataset=data.name,
        cost=cost,
        fold=str(fold),
        rates=rates,
        nec=nec(rates, cost, 0.5),
        train_seconds=elapsed,
        effective_rounds=classifier.effective_rounds,
        trained_rounds=classifier.trained_rounds,
    )
    trace_rows = [
        (t + 1, trace.alphas[t], trace.zs[t], trace.train_nec[t], trace.train_ca[t])
        for t in range(len(trace))
    ]
    return record, trace_rows


def _run_batch(payload):
    """Worker entry: all (cost, fold) cells of one (dataset, algorithm)."""
    algorithm, data, fold_of, cost_values, rounds, convergence, folds = payload
    records, traces, failures = [], {}, []
    for c_pos, c_neg in cost_values:
        cost = CostPair(c_pos, c_neg)
        for fold in range(folds):
            try:
                record, trace_rows = _run_cell(
                    algorithm, data, fold_of, fold, cost, rounds, convergence
                )
            except Exception as exc:  # cell failures must not kill the sweep
                failures.append(
                    CellFailure(data.name, algorithm, cost, str(fold), repr(exc))
                )
                continue
            records.append(record)
            traces[(data.name, algorithm, repr(float(c_pos)), repr(float(c_neg)),
                    str(fold))] = trace_rows
    return records, traces, failures


def _average_record(fold_records) -> ResultRecord:
    rates = ConfusionRates(
        fnr=float(np.mean([r.rates.fnr for r in fold_records])),
        fpr=float(np.mean([r.rates.fpr for r in fold_records])),
        ce=float(np.mean([r.rates.ce for r in fold_records])),
        n_pos=sum(r.rates.n_pos for r in fold_records),
        n_neg=sum(r.rates.n_neg for r in fold_records),
    )
    first = fold_records[0]
    return ResultRecord(
        algorithm=first.algorithm,
        dataset=first.dataset,
        cost=first.cost,
        fold=AVG_FOLD,
        rates=rates,
        nec=nec(rates, first.cost, 0.5),
        train_seconds=float(np.mean([r.train_seconds for r in fold_records])),
        effective_rounds=int(round(np.mean([r.effective_rounds for r in fold_records]))),
        trained_rounds=int(round(np.mean([r.trained_rounds for r in fold_records]))),
    )


def _bayes_reference_records(data: Dataset, costs) -> list:
    records = []
    for c_pos, c_neg in costs:
        cost = CostPair(c_pos, c_neg)
        pred = bayes_optimal_predict(data.gauss, cost, data.coords)
        rates = confusion_rates(pred, data.labels)
        records.append(
            ResultRecord(
                algorithm=BAYES_REFERENCE,
                dataset=data.name,
                cost=cost,
                fold=ALL_FOLD,
                rates=rates,
                nec=nec(rates, cost, 0.5),
            )
        )
    return records


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> RunStore:
    """Execute the full sweep described by ``config``.

    Cells are independent jobs; any number of workers produces the same
    records and traces, sorted by a canonical key. Per-cell failures are
    collected as diagnostics instead of aborting the sweep.
    """
    store = RunStore(config=config.to_dict(), environment=_environment_fingerprint())

    batches = []
    for index, spec in enumerate(config.datasets):
        data = _build_dataset(spec, config.seed, index)
        fold_of = stratified_kfold(
            data.labels, config.folds, _derived_seed(config.seed, index, 1)
        ).fold_of
        rounds = _resolve_rounds(config, spec, data)
        if data.gauss is not None:
            store.records.extend(_bayes_reference_records(data, config.costs))
        for algorithm in config.algorithms:
            batches.append(
                (algorithm, data, fold_of, tuple(config.costs), rounds,
                 config.convergence, config.folds)
            )

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_batch, batches))
    else:
        results = [_run_batch(batch) for batch in batches]

    grouped = {}
    for records, traces, failures in results:
        store.failures.extend(failures)
        store.traces.update(traces)
        for record in records:
            store.records.append(record)
            grouped.setdefault(
                (record.dataset, record.algorithm, record.cost), []
            ).append(record)
    for key in sorted(grouped, key=lambda k: (k[0], k[1], k[2].c_pos, k[2].c_neg)):
        store.records.append(_average_record(grouped[key]))

    store.records.sort(key=_record_sort_key)
    return store


# -- report emission ----------------------------------------------------


def _fmt(value: float) -> str:
    return repr(float(value))


def _write_rows(path: Path, header: str, rows) -> Path:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(header + "\n")
        for row in rows:
            handle.write(",".join(str(cell) for cell in row) + "\n")
    return path


def _delta_inputs(store: RunStore, attribute: str):
    """Fold-averaged per-scenario deviations from the best algorithm.

    Reference rows ("BAY") are excluded: the deltas rank the trained
    classifiers against each other.
    """
    from .metrics import delta_table

    scenario = {}
    for rec in store.records:
        if rec.fold != AVG_FOLD or rec.algorithm == BAYES_REFERENCE:
            continue
        value = rec.nec if attribute == "nec" else rec.rates.ce
        scenario.setdefault((rec.dataset, rec.cost), {})[rec.algorithm] = value
    rows = []
    for (dataset, cost), per_algorithm in scenario.items():
        for algorithm, delta in delta_table(per_algorithm).items():
            rows.append((algorithm, cost, dataset, delta))
    return rows


def emit_report(store: RunStore, kind: str, out_dir) -> list:
    """Write one report family as CSV data files; returns the paths."""
    from .metrics import conditional_moments

    if not store.records:
        raise ValueError("store has no records")
    if kind not in REPORT_KINDS:
        raise ValueError(f"unknown report kind {kind!r}")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []

    if kind == "appendix_tables":
        datasets = sorted({rec.dataset for rec in store.records})
        for dataset in datasets:
            rows = []
            for rec in store.records:
                if rec.dataset != dataset or rec.fold not in (AVG_FOLD, ALL_FOLD):
                    continue
                cost_label = f"[{_trim(rec.cost.c_pos)};{_trim(rec.cost.c_neg)}]"
                rows.append(
                    (cost_label, rec.algorithm, _fmt(rec.rates.fnr), _fmt(rec.rates.fpr),
                     _fmt(rec.rates.ce), _fmt(rec.nec))
                )
            paths.append(
                _write_rows(out / f"results_{dataset}.csv", "Cost,Alg,FNR,FPR,CE,NEC", rows)
            )
        return paths

    if kind in ("delta_global", "delta_by_cost"):
        for attribute, label in (("nec", "nec"), ("ce", "ce")):
            by_alg, by_alg_cost = conditional_moments(_delta_inputs(store, attribute))
            if kind == "delta_global":
                rows = [
                    (alg, _fmt(stats["mean"]), _fmt(stats["variance"]))
                    for alg, stats in sorted(by_alg.items())
                ]
                paths.append(
                    _write_rows(out / f"delta_{label}_global.csv",
                                "algorithm,mean,variance", rows)
                )
            else:
                rows = [
                    (alg, _trim(cost.c_pos), _trim(cost.c_neg),
                     _fmt(stats["mean"]), _fmt(stats["variance"]))
                    for (alg, cost), stats in sorted(
                        by_alg_cost.items(),
                        key=lambda item: (item[0][0], item[0][1].c_pos, item[0][1].c_neg),
                    )
                ]
                paths.append(
                    _write_rows(out / f"delta_{label}_by_cost.csv",
                                "algorithm,c_pos,c_neg,mean,variance", rows)
                )
        return paths

    if kind == "ca_surface":
        grouped = {}
        for (dataset, algorithm, c_pos, c_neg, fold), rows in store.traces.items():
            for round_no, _alpha, _z, _nec, ca in rows:
                grouped.setdefault(
                    (dataset, algorithm, float(c_pos), float(c_neg), round_no), []
                ).append(ca)
        rows = []
        for key in sorted(grouped):
            values = [v for v in grouped[key] if not np.isnan(v)]
            if not values:
                continue  # undefined in every fold: skip instead of poisoning
            dataset, algorithm, c_pos, c_neg, round_no = key
            rows.append(
                (dataset, algorithm, _trim(c_pos), _trim(c_neg), round_no,
                 _fmt(float(np.mean(values))))
            )
        paths.append(
            _write_rows(out / "ca_surface.csv",
                        "dataset,algorithm,c_pos,c_neg,round,train_ca", rows)
        )
        return paths

    # timing: grand mean per algorithm with the ratio to CGA, plus the
    # cost-conditioned means (both views answer different questions)
    per_alg = {}
    per_alg_cost = {}
    for rec in store.records:
        if rec.fold in (AVG_FOLD, ALL_FOLD) or rec.algorithm == BAYES_REFERENCE:
            continue
        per_alg.setdefault(rec.algorithm, []).append(rec.train_seconds)
        per_alg_cost.setdefault((rec.algorithm, rec.cost), []).append(rec.train_seconds)
    means = {alg: float(np.mean(vals)) for alg, vals in per_alg.items()}
    base = means.get("CGA")
    rows = []
    for alg in sorted(means):
        ratio = _fmt(means[alg] / base) if base else ""
        rows.append((alg, _fmt(means[alg]), ratio))
    paths.append(
        _write_rows(out / "timing_grand.csv", "algorithm,mean_seconds,ratio_to_cga", rows)
    )
    rows = [
        (alg, _trim(cost.c_pos), _trim(cost.c_neg), _fmt(float(np.mean(vals))))
        for (alg, cost), vals in sorted(
            per_alg_cost.items(),
            key=lambda item: (item[0][0], item[0][1].c_pos, item[0][1].c_neg),
        )
    ]
    paths.append(
        _write_rows(out / "timing_by_cost.csv", "algorithm,c_pos,c_neg,mean_seconds", rows)
    )
    return paths


def _trim(value: float) -> str:
    """Integer-looking costs print without a trailing .0."""
    value = float(value)
    return str(int(value)) if value == int(value) else repr(value)
