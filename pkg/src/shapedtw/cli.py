"""Command-line interface.

Subcommands: align, simulate, evaluate-alignment, classify, loocv,
sharpshooter, table. ``--config FILE.json`` supplies defaults for any option
of the chosen subcommand; explicit flags win.
"""
import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from . import io
from .classify import DistanceConfig, evaluate_dataset, loocv_accuracy, sharpshooter
from .core import z_normalize
from .dtw import WdtwConfig, ddtw_align, dtw_align, wdtw_align
from .metrics import mean_absolute_deviation
from .pipeline import shapedtw_align
from .simulate import SimConfig, simulate_pair
from .steps import step_pattern_table

log = logging.getLogger("shapedtw")

PATTERNS = [p.name for p in step_pattern_table()]


def _add_method_args(p, default_descriptor="raw", local_cost=True):
    p.add_argument("--method", choices=["dtw", "ddtw", "wdtw", "shapedtw"], default="dtw")
    p.add_argument("--descriptor", default=default_descriptor,
                   help="raw, paa, dwt, slope, derivative, hog1d or compound:A+B:gamma")
    p.add_argument("--subseq-len", type=int, default=30)
    p.add_argument("--step-pattern", choices=PATTERNS, default="symmetric1")
    p.add_argument("--g", type=float, default=0.1, help="wDTW logistic curvature")
    p.add_argument("--no-znorm", action="store_true")
    if local_cost:
        p.add_argument("--local-cost", choices=["abs", "squared"], default="abs",
                       help="local cost: |p-q| (row l2) or its square")


def _distance_config(args, method=None):
    return DistanceConfig(
        method=method or args.method,
        descriptor=args.descriptor,
        subseq_len=args.subseq_len,
        pattern=args.step_pattern,
        g=args.g,
        znorm=not args.no_znorm,
        local_cost=args.local_cost,
    )


def _emit(text, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------


def cmd_align(args):
    P = io.load_multivariate_series(args.series_a)
    Q = io.load_multivariate_series(args.series_b)
    if not args.no_znorm:
        P, Q = z_normalize(P), z_normalize(Q)
    if args.method == "dtw":
        res = dtw_align(P, Q, args.step_pattern)
    elif args.method == "ddtw":
        res = ddtw_align(P, Q, args.step_pattern)
    elif args.method == "wdtw":
        res = wdtw_align(P, Q, WdtwConfig(g=args.g), args.step_pattern)
    else:
        res = shapedtw_align(P, Q, args.descriptor, args.subseq_len, args.step_pattern)
    config = dict(res.config, znorm=not args.no_znorm,
                  inputs=[str(args.series_a), str(args.series_b)])
    prefix = Path(args.out)
    io.write_path_tsv(prefix.with_name(prefix.name + ".path.tsv"), res.path, config)
    io.write_json(
        prefix.with_name(prefix.name + ".json"),
        {
            "distance": res.distance,
            "normalized_distance": res.normalized_distance,
            "path_length": int(len(res.path)),
            "lengths": [int(len(P)), int(len(Q))],
        },
        config,
    )
    print(f"distance {io.fmt(res.distance)}  path length {len(res.path)}")
    return 0


def _simulate_one(source, seed, stretch, args, out_dir, jobs_log):
    ds = io.load_ucr_dataset(source)
    cfg = SimConfig(a=args.range[0], b=args.range[1], smoothing=args.smoothing,
                    stretch=stretch, taus=tuple(args.taus))
    stem = Path(source).stem
    for k, (lab, series) in enumerate(zip(ds.labels, ds.series)):
        pair = simulate_pair(series, cfg, np.random.default_rng([seed, k]))
        base = out_dir / f"{stem}_{k + 1:05d}"
        conf = {"source": str(source), "instance": k + 1, "seed": [seed, k],
                "sim": {"a": cfg.a, "b": cfg.b, "smoothing": cfg.smoothing,
                        "stretch": cfg.stretch, "taus": list(cfg.taus)}}
        with open(f"{base}.warped.tsv", "w") as fh:
            fh.write("\t".join([str(int(lab))] + [io.fmt(v) for v in pair.warped]) + "\n")
        # (original index, warped index): rows follow the reference series
        io.write_path_tsv(f"{base}.truth.tsv", pair.truth_by_original, conf)
        jobs_log.append({"source": str(source), "instance": k + 1,
                         "warped": f"{base.name}.warped.tsv", "truth": f"{base.name}.truth.tsv",
                         "original_length": int(len(pair.original)),
                         "warped_length": int(len(pair.warped))})


def cmd_simulate(args):
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if args.manifest:
        entries = json.loads(Path(args.manifest).read_text())
    else:
        if not args.dataset:
            raise SystemExit("simulate: give a dataset file or --manifest")
        entries = [{"source": args.dataset, "seed": args.seed, "stretch": args.stretch}]
    written = []
    for e in entries:
        _simulate_one(e["source"], int(e.get("seed", args.seed)),
                      float(e.get("stretch", e.get("alpha_stretch", args.stretch))),
                      args, out_dir, written)
    io.write_json(out_dir / "index.json", {"pairs": written}, {"entries": entries})
    print(f"wrote {len(written)} simulated pairs to {out_dir}")
    return 0


def cmd_evaluate_alignment(args):
    a = io.read_path_tsv(args.path_a)
    b = io.read_path_tsv(args.path_b)
    dev = mean_absolute_deviation(a, b, args.ref_len, args.sample_rate)
    config = {"paths": [str(args.path_a), str(args.path_b)], "ref_len": args.ref_len,
              "sample_rate": args.sample_rate}
    _emit(io.dump_json(dev.to_dict(), config), args.out)
    return 0


def cmd_classify(args):
    train = io.load_ucr_dataset(args.train)
    test = io.load_ucr_dataset(args.test)
    cfg = _distance_config(args)
    rep = evaluate_dataset(train, test, cfg, args.jobs)
    log.info("%s %s error %.3f", rep.dataset, cfg.label, rep.error_rate)
    _emit(io.dump_json(rep.to_dict(), {"train": str(args.train), "test": str(args.test),
                                       **cfg.to_dict()}), args.out)
    return 0


def cmd_loocv(args):
    train = io.load_ucr_dataset(args.train)
    cfg = _distance_config(args)
    acc = loocv_accuracy(train, cfg, args.jobs)
    _emit(io.dump_json({"dataset": train.name, "method": cfg.to_dict(), "accuracy": acc},
                       {"train": str(args.train), **cfg.to_dict()}), args.out)
    return 0


def cmd_sharpshooter(args):
    train = io.load_ucr_dataset(args.train)
    test = io.load_ucr_dataset(args.test)
    cfg = _distance_config(args, "shapedtw")
    base = DistanceConfig("dtw", pattern=args.step_pattern, znorm=not args.no_znorm,
                          local_cost=args.baseline_cost)
    row = sharpshooter(train, test, cfg, base, args.jobs)
    header = list(row)
    io.write_csv(args.out, header, [list(row.values())], {"train": str(args.train),
                                                          "test": str(args.test), **cfg.to_dict()})
    print(f"{row['dataset']}: expected gain {row['expected_gain']:.4f}, "
          f"actual gain {row['actual_gain']:.4f} ({row['region']})")
    return 0


# NN-DTW baselines conventionally use squared pointwise cost; the shapeDTW
# columns use plain l2 between descriptors
TABLE_COLUMNS = [("DTW", "dtw", None, "squared"), ("Raw-Subsequence", "shapedtw", "raw", "abs"),
                 ("HOG1D", "shapedtw", "hog1d", "abs")]


def cmd_table(args):
    root = Path(args.ucr_root)
    names = args.datasets or sorted(p.name for p in root.iterdir() if p.is_dir())
    rows = []
    for name in names:
        tr, te = io.find_ucr_split(root, name, "TRAIN"), io.find_ucr_split(root, name, "TEST")
        if tr is None or te is None:
            log.warning("skipping %s: train/test files not found", name)
            continue
        train, test = io.load_ucr_dataset(tr, name), io.load_ucr_dataset(te, name)
        row = [name]
        for _, method, desc, cost in TABLE_COLUMNS:
            cfg = DistanceConfig(method, descriptor=desc or "raw", subseq_len=args.subseq_len,
                                 local_cost=cost)
            row.append(evaluate_dataset(train, test, cfg, args.jobs).error_rate)
        log.info("%s", row)
        rows.append(row)
    io.write_csv(args.out, ["dataset"] + [c[0] for c in TABLE_COLUMNS], rows,
                 {"ucr_root": str(root), "subseq_len": args.subseq_len})
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


# --------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="shapedtw", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="JSON file with option defaults")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("align", help="align two series files")
    p.add_argument("series_a")
    p.add_argument("series_b")
    _add_method_args(p, "derivative", local_cost=False)
    p.add_argument("-o", "--out", default="alignment", help="output prefix")
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("simulate", help="simulate aligned pairs from a UCR file")
    p.add_argument("dataset", nargs="?")
    p.add_argument("--manifest", help="JSON list of {source, seed, stretch}")
    p.add_argument("--out-dir", default="simulated")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stretch", type=float, default=0.15, help="fraction of points stretched")
    p.add_argument("--range", type=float, nargs=2, default=[0.5, 1.0], metavar=("A", "B"))
    p.add_argument("--smoothing", type=int, default=5)
    p.add_argument("--taus", type=int, nargs="+", default=[1, 2, 3])
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("evaluate-alignment", help="Mean Absolute Deviation between two path files")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--ref-len", type=int, default=None)
    p.add_argument("--sample-rate", type=float, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_evaluate_alignment)

    for name, func, help_ in (("classify", cmd_classify, "1-NN test error"),
                              ("loocv", cmd_loocv, "leave-one-out accuracy on the training set")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("train")
        if name == "classify":
            p.add_argument("test")
        _add_method_args(p)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("-o", "--out")
        p.set_defaults(func=func)

    p = sub.add_parser("sharpshooter", help="expected vs actual gain of shapeDTW over DTW")
    p.add_argument("train")
    p.add_argument("test")
    _add_method_args(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--baseline-cost", choices=["abs", "squared"], default="squared",
                   help="local cost of the DTW baseline")
    p.add_argument("-o", "--out", default="gains.csv")
    p.set_defaults(func=cmd_sharpshooter)

    p = sub.add_parser("table", help="DTW / Raw-Subsequence / HOG1D error rates over UCR datasets")
    p.add_argument("--ucr-root", required=True)
    p.add_argument("--datasets", nargs="*")
    p.add_argument("--subseq-len", type=int, default=30)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--out", default="error_rates.csv")
    p.set_defaults(func=cmd_table)
    return parser


def _apply_config(parser, argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    cfg = json.loads(Path(known.config).read_text())
    defaults = {k.replace("-", "_"): v for k, v in cfg.items()}
    for action in parser._subparsers._group_actions:
        for sp in action.choices.values():
            valid = {a.dest for a in sp._actions}
            sp.set_defaults(**{k: v for k, v in defaults.items() if k in valid})


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        _apply_config(parser, argv)
    except (OSError, ValueError) as e:
        print(f"shapedtw: bad --config: {e}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError) as e:
        print(f"shapedtw {args.command}: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
