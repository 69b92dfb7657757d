"""File formats: UCR datasets, multivariate CSV series, path TSV, JSON reports.

Floats in text tables are written with 17 significant digits so a write
followed by a read reproduces every 64-bit value exactly.
"""
import json
import math
import re
from pathlib import Path

import numpy as np

from . import __version__
from .classify import LabeledDataset

_SPLIT = re.compile(r"[,\s]+")


class ParseError(ValueError):
    pass


def fmt(x):
    return format(float(x), ".17g")


def _parse_floats(tokens, path, lineno):
    vals = []
    for tok in tokens:
        try:
            v = float(tok)
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not a number: {tok!r}") from None
        if not math.isfinite(v):
            raise ParseError(f"{path}:{lineno}: non-finite value {tok!r}")
        vals.append(v)
    return vals


def _data_lines(path):
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            s = line.strip()
            if s and not s.startswith("#"):
                yield lineno, s


def load_ucr_dataset(path, name=None, split=None):
    """One instance per line: integer class label, then the series values.

    Fields may be separated by commas and/or whitespace. Labels written as
    floats (``1.0000000e+00``) are accepted when integral.
    """
    path = Path(path)
    labels, series = [], []
    for lineno, line in _data_lines(path):
        tokens = [t for t in _SPLIT.split(line) if t]
        vals = _parse_floats(tokens, path, lineno)
        if len(vals) < 2:
            raise ParseError(f"{path}:{lineno}: need a label and at least one value")
        if vals[0] != int(vals[0]):
            raise ParseError(f"{path}:{lineno}: class label {tokens[0]!r} is not an integer")
        labels.append(int(vals[0]))
        series.append(np.array(vals[1:]))
    if not series:
        raise ParseError(f"{path}: no instances")
    if name is None:
        name = re.sub(r"_(TRAIN|TEST)$", "", path.stem, flags=re.I)
    if split is None:
        m = re.search(r"_(TRAIN|TEST)$", path.stem, flags=re.I)
        split = m.group(1).lower() if m else ""
    return LabeledDataset(np.array(labels), series, name, split)


def write_ucr_dataset(path, dataset, sep="\t"):
    with open(path, "w") as fh:
        for lab, s in zip(dataset.labels, dataset.series):
            fh.write(sep.join([str(int(lab))] + [fmt(v) for v in np.ravel(s)]) + "\n")


def find_ucr_split(root, name, split):
    """Locate ``<root>/<name>/<name>_<SPLIT>[.tsv|.txt|]`` allowing old name spellings."""
    root = Path(root)
    split = split.upper()
    variants = [name, name.replace("-", ""), name.replace("-", "_"), name.replace("_", "")]
    for v in dict.fromkeys(variants):
        for d in (root / v, root):
            for ext in (".tsv", ".txt", ".csv", ""):
                p = d / f"{v}_{split}{ext}"
                if p.is_file():
                    return p
    return None


def load_multivariate_series(path):
    """CSV (or whitespace separated) table with one row per time step."""
    path = Path(path)
    rows = []
    for lineno, line in _data_lines(path):
        rows.append(_parse_floats([t for t in _SPLIT.split(line) if t], path, lineno))
        if len(rows[-1]) != len(rows[0]):
            raise ParseError(f"{path}:{lineno}: expected {len(rows[0])} columns, got {len(rows[-1])}")
    if not rows:
        raise ParseError(f"{path}: empty series file")
    return np.array(rows)


def write_multivariate_series(path, series, header=None):
    x = np.asarray(series, dtype=np.float64)
    if x.ndim == 1:
        x = x[:, None]
    with open(path, "w") as fh:
        if header:
            fh.write(f"# {header}\n")
        for row in x:
            fh.write(",".join(fmt(v) for v in row) + "\n")


def meta_header(config):
    return {"tool": "shapedtw", "version": __version__, "config": config}


def write_path_tsv(path, warping_path, config=None):
    """Two 1-based index columns under a ``# i j`` header."""
    p = np.asarray(warping_path, dtype=np.int64) + 1
    with open(path, "w") as fh:
        fh.write("# " + json.dumps(meta_header(config or {}), sort_keys=True) + "\n")
        fh.write("# i j\n")
        for i, j in p:
            fh.write(f"{i}\t{j}\n")


def read_path_tsv(path):
    """Read a path TSV back into 0-based ``(l, 2)`` indices."""
    rows = []
    for lineno, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"{path}:{lineno}: expected two index columns")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-integer index") from None
        if i < 1 or j < 1:
            raise ParseError(f"{path}:{lineno}: indices are 1-based")
        rows.append((i - 1, j - 1))
    if not rows:
        raise ParseError(f"{path}: empty path file")
    return np.array(rows, dtype=np.int64)


def dump_json(obj, config=None):
    out = {"meta": meta_header(config or {})}
    out.update(obj)
    return json.dumps(out, indent=2, sort_keys=True, default=_json_default) + "\n"


def write_json(path, obj, config=None):
    Path(path).write_text(dump_json(obj, config))


def _json_default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serializable: {type(o).__name__}")


def write_csv(path, header, rows, config=None):
    with open(path, "w") as fh:
        fh.write("# " + json.dumps(meta_header(config or {}), sort_keys=True) + "\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) if isinstance(v, float) else str(v) for v in row) + "\n")
