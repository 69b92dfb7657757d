import json

import numpy as np
import pytest

from shapedtw import LabeledDataset, io
from shapedtw.cli import main


def test_ucr_line(tmp_path):
    f = tmp_path / "X_TRAIN.txt"
    f.write_text("2,0.1,0.2,0.3\n1.0000000e+00  4  5\n")
    ds = io.load_ucr_dataset(f)
    assert (ds.name, ds.split) == ("X", "train")
    assert list(ds.labels) == [2, 1]
    np.testing.assert_array_equal(ds.series[0], [0.1, 0.2, 0.3])


@pytest.mark.parametrize("line", ["1,0.1,NaN,0.3", "1,abc", "1.5,2,3", "3"])
def test_ucr_parse_errors(tmp_path, line):
    f = tmp_path / "bad.tsv"
    f.write_text("1,1,2\n" + line + "\n")
    with pytest.raises(io.ParseError, match=":2:"):
        io.load_ucr_dataset(f)


def test_ucr_round_trip(tmp_path, rng):
    ds = LabeledDataset([1, 2, 1], [rng.normal(size=7) for _ in range(3)])
    io.write_ucr_dataset(tmp_path / "d.tsv", ds)
    back = io.load_ucr_dataset(tmp_path / "d.tsv")
    assert list(back.labels) == [1, 2, 1]
    for a, b in zip(ds.series, back.series):
        np.testing.assert_array_equal(a, b)


def test_multivariate_round_trip(tmp_path, rng):
    x = rng.normal(size=(3, 2))
    io.write_multivariate_series(tmp_path / "s.csv", x, "feat")
    y = io.load_multivariate_series(tmp_path / "s.csv")
    assert y.shape == (3, 2)
    np.testing.assert_array_equal(x, y)
    io.write_multivariate_series(tmp_path / "u.csv", x[:, 0])
    assert io.load_multivariate_series(tmp_path / "u.csv").shape == (3, 1)


def test_multivariate_ragged(tmp_path):
    (tmp_path / "r.csv").write_text("1,2\n3\n")
    with pytest.raises(io.ParseError, match="columns"):
        io.load_multivariate_series(tmp_path / "r.csv")


def test_path_round_trip(tmp_path):
    p = np.array([[0, 0], [1, 0], [2, 1]])
    io.write_path_tsv(tmp_path / "p.tsv", p, {"a": 1})
    lines = (tmp_path / "p.tsv").read_text().splitlines()
    assert lines[1] == "# i j" and lines[2] == "1\t1"
    np.testing.assert_array_equal(io.read_path_tsv(tmp_path / "p.tsv"), p)


def test_find_ucr_split(tmp_path):
    (tmp_path / "GunPoint").mkdir()
    (tmp_path / "GunPoint" / "GunPoint_TEST.tsv").write_text("1,1\n")
    assert io.find_ucr_split(tmp_path, "Gun-Point", "test") is not None
    assert io.find_ucr_split(tmp_path, "Gun-Point", "train") is None


# ---------------------------------------------------------------- CLI


@pytest.fixture
def series_files(tmp_path):
    t = np.linspace(0, 6, 50)
    io.write_multivariate_series(tmp_path / "a.csv", np.sin(t))
    io.write_multivariate_series(tmp_path / "b.csv", np.sin(t[:40] * 1.2))
    return tmp_path / "a.csv", tmp_path / "b.csv"


@pytest.fixture
def ucr_files(tmp_path):
    rng = np.random.default_rng(5)
    t = np.linspace(0, 6, 24)

    def make(n):
        labels = [1 + k % 2 for k in range(n)]
        series = [(np.sin(t) if lab == 1 else np.cos(t)) + rng.normal(scale=0.1, size=24) for lab in labels]
        return LabeledDataset(labels, series)

    io.write_ucr_dataset(tmp_path / "T_TRAIN.tsv", make(8))
    io.write_ucr_dataset(tmp_path / "T_TEST.tsv", make(6))
    return tmp_path / "T_TRAIN.tsv", tmp_path / "T_TEST.tsv"


@pytest.mark.parametrize("method", ["dtw", "ddtw", "wdtw", "shapedtw"])
def test_align(tmp_path, series_files, method, capsys):
    a, b = series_files
    out = tmp_path / "res"
    assert main(["align", str(a), str(b), "--method", method, "--descriptor", "derivative",
                 "--subseq-len", "30", "-o", str(out)]) == 0
    rep = json.loads((tmp_path / "res.json").read_text())
    assert rep["lengths"] == [50, 40] and rep["meta"]["config"]["method"] == method
    path = io.read_path_tsv(tmp_path / "res.path.tsv")
    assert tuple(path[-1]) == (49, 39) and len(path) == rep["path_length"]


def test_align_rerun_byte_identical(tmp_path, series_files):
    a, b = series_files
    for k in (1, 2):
        main(["align", str(a), str(b), "--method", "shapedtw", "-o", str(tmp_path / f"r{k}")])
    assert (tmp_path / "r1.path.tsv").read_bytes() == (tmp_path / "r2.path.tsv").read_bytes()


def test_simulate_and_evaluate(tmp_path, ucr_files, capsys):
    train, _ = ucr_files
    out = tmp_path / "sim"
    assert main(["simulate", str(train), "--out-dir", str(out), "--seed", "3"]) == 0
    index = json.loads((out / "index.json").read_text())
    assert len(index["pairs"]) == 8
    first = index["pairs"][0]
    truth = out / first["truth"]
    warped = io.load_ucr_dataset(out / first["warped"])
    assert len(warped.series[0]) == first["warped_length"]
    assert main(["evaluate-alignment", str(truth), str(truth), "-o", str(tmp_path / "mad.json")]) == 0
    assert json.loads((tmp_path / "mad.json").read_text())["mad"] == 0
    again = tmp_path / "sim2"
    main(["simulate", str(train), "--out-dir", str(again), "--seed", "3"])
    assert (again / first["warped"]).read_bytes() == (out / first["warped"]).read_bytes()


def test_classify_loocv_sharpshooter(tmp_path, ucr_files, capsys):
    train, test = ucr_files
    assert main(["classify", str(train), str(test), "--method", "shapedtw", "--descriptor", "hog1d",
                 "--subseq-len", "10", "-o", str(tmp_path / "c.json")]) == 0
    rep = json.loads((tmp_path / "c.json").read_text())
    assert rep["n_test"] == 6 and rep["error_rate"] == 0
    assert main(["loocv", str(train), "-o", str(tmp_path / "l.json")]) == 0
    assert json.loads((tmp_path / "l.json").read_text())["accuracy"] == 1.0
    assert main(["sharpshooter", str(train), str(test), "-o", str(tmp_path / "g.csv")]) == 0
    lines = (tmp_path / "g.csv").read_text().splitlines()
    assert lines[1].startswith("dataset,") and len(lines) == 3


def test_table(tmp_path, ucr_files, capsys):
    root = tmp_path / "ucr" / "T"
    root.mkdir(parents=True)
    for f in ucr_files:
        (root / f.name).write_text(f.read_text())
    assert main(["table", "--ucr-root", str(tmp_path / "ucr"), "--subseq-len", "10",
                 "-o", str(tmp_path / "t.csv")]) == 0
    lines = (tmp_path / "t.csv").read_text().splitlines()
    assert lines[1] == "dataset,DTW,Raw-Subsequence,HOG1D"
    assert lines[2].startswith("T,")


def test_config_file_precedence(tmp_path, ucr_files):
    train, test = ucr_files
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"method": "shapedtw", "subseq-len": 5, "descriptor": "paa"}))
    main(["--config", str(cfg), "classify", str(train), str(test), "-o", str(tmp_path / "a.json")])
    main(["--config", str(cfg), "classify", str(train), str(test), "--subseq-len", "7",
          "-o", str(tmp_path / "b.json")])
    a = json.loads((tmp_path / "a.json").read_text())["method"]
    b = json.loads((tmp_path / "b.json").read_text())["method"]
    assert (a["method"], a["descriptor"], a["subseq_len"]) == ("shapedtw", "paa", 5)
    assert b["subseq_len"] == 7


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["align", "a", "b", "--bogus"])
    assert e.value.code == 2


def test_runtime_error_exit_code(tmp_path, capsys):
    (tmp_path / "bad.csv").write_text("1,nan\n")
    assert main(["align", str(tmp_path / "bad.csv"), str(tmp_path / "bad.csv")]) == 1
    assert "error" in capsys.readouterr().err
