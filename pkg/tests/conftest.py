import os
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

DEFAULT_UCR_ROOT = Path(__file__).parent / "data" / "ucr"


def ucr_root():
    return Path(os.environ.get("SHAPEDTW_UCR_ROOT", DEFAULT_UCR_ROOT))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def ucr():
    """Loader for vendored UCR splits; skips when a dataset is missing."""
    from shapedtw.io import find_ucr_split, load_ucr_dataset

    def load(name):
        root = ucr_root()
        tr = find_ucr_split(root, name, "TRAIN")
        te = find_ucr_split(root, name, "TEST")
        if tr is None or te is None:
            pytest.skip(f"UCR dataset {name} not found under {root}")
        return load_ucr_dataset(tr, name, "TRAIN"), load_ucr_dataset(te, name, "TEST")

    return load


ACCEPTANCE_LINES = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criteria")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
