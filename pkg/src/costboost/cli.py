"""Command-line front end: run sweeps, emit reports, generate datasets.

Subcommands::

    costboost run    --config cfg.json --out rundir [--jobs N] [--seed S]
    costboost report --store rundir --kind <kind> [--out dir]
    costboost gen    --dataset bayes|twoclouds --out file.csv
                     [--n-pos N] [--n-neg N] [--seed S] [--coords]

The config file is a JSON object mirroring the experiment configuration
field-for-field (datasets, algorithms, costs, folds, rounds, seed,
convergence).
"""

import argparse
import sys
from pathlib import Path

from .datasets import gen_bayes, gen_two_clouds
from .harness import REPORT_KINDS, ExperimentConfig, RunStore, emit_report, run_experiment


def _cmd_run(args) -> int:
    config = ExperimentConfig.from_json(args.config)
    if args.seed is not None:
        from dataclasses import replace

        config = replace(config, seed=args.seed)
    store = run_experiment(config, jobs=args.jobs)
    out = store.save(args.out)
    print(f"wrote {len(store.records)} records to {out}")
    if store.failures:
        print(f"{len(store.failures)} cell(s) failed; see failures.csv", file=sys.stderr)
    return 0


def _cmd_report(args) -> int:
    store = RunStore.load(args.store)
    out = args.out if args.out else Path(args.store) / "reports"
    for path in emit_report(store, args.kind, out):
        print(path)
    return 0


def _cmd_gen(args) -> int:
    if args.dataset == "bayes":
        data = gen_bayes(args.n_pos or 250, args.n_neg or 250, seed=args.seed)
    else:
        data = gen_two_clouds(args.n_pos or 500, args.n_neg or 500, seed=args.seed)
    columns = ["label"] + list(data.feature_names)
    if args.coords:
        columns += ["x", "y"]
    with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(",".join(columns) + "\n")
        for i in range(data.n_samples):
            row = [str(int(data.labels[i]))] + [repr(float(v)) for v in data.features[i]]
            if args.coords:
                row += [repr(float(v)) for v in data.coords[i]]
            handle.write(",".join(row) + "\n")
    print(f"wrote {data.n_samples} samples x {data.n_features} features to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="costboost", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a benchmark sweep")
    p_run.add_argument("--config", required=True, help="JSON experiment config")
    p_run.add_argument("--out", required=True, help="run directory to create")
    p_run.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_run.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_run.set_defaults(func=_cmd_run)

    p_report = sub.add_parser("report", help="emit report files from a run directory")
    p_report.add_argument("--store", required=True, help="run directory")
    p_report.add_argument("--kind", required=True, choices=REPORT_KINDS)
    p_report.add_argument("--out", default=None, help="output directory (default: <store>/reports)")
    p_report.set_defaults(func=_cmd_report)

    p_gen = sub.add_parser("gen", help="generate a synthetic dataset CSV")
    p_gen.add_argument("--dataset", required=True, choices=("bayes", "twoclouds"))
    p_gen.add_argument("--out", required=True, help="output CSV path")
    p_gen.add_argument("--n-pos", type=int, default=0)
    p_gen.add_argument("--n-neg", type=int, default=0)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--coords", action="store_true",
                       help="also write the raw 2-D coordinates")
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
