import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from boolclt import make_measure  # noqa: E402


@st.composite
def measures(draw, min_atoms=1, max_atoms=6, spread=3.0, min_gap=0.05):
    xs = draw(st.lists(st.floats(-spread, spread, allow_nan=False), min_size=min_atoms,
                       max_size=max_atoms))
    xs = sorted(xs)
    kept = []
    for x in xs:
        if not kept or x - kept[-1] >= min_gap:
            kept.append(x)
    ws = draw(st.lists(st.floats(0.05, 1.0), min_size=len(kept), max_size=len(kept)))
    ws = np.array(ws) / sum(ws)
    return make_measure(zip(kept, ws))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
