from pathlib import Path

import pytest
from hypothesis import strategies as st

from mlambda_inventory import TrapezoidalFuzzyNumber

DATA = Path(__file__).parent / "data"

# printed (a, b, alpha, beta) demands and (d, c, h) costs of the ten-item example
REF_DEMANDS = [
    (28, 30, 9, 10.5), (27, 30, 8.5, 5), (36, 39, 12.5, 5), (28, 32, 3, 4), (32, 35, 6, 10),
    (32, 35, 11, 2), (28, 33, 7, 6), (27, 30, 9.5, 7), (29, 31, 5.5, 4), (27, 35, 7.5, 2),
]
REF_COSTS = [
    (12, 2, 0.5), (11, 1, 0.6), (14, 3, 0.5), (10, 4, 0.8), (11, 5, 0.9),
    (10, 3, 0.9), (12, 2, 0.5), (15, 1, 0.6), (13, 3, 0.7), (13, 4, 0.9),
]
# printed x* columns for lambda = 1/3, 1/2, 2/3
REF_XSTAR = {
    1 / 3: [718.21, 518.19, 1019.75, 387.92, 432.03, 355.13, 743.93, 710.45, 563.24, 437.88],
    1 / 2: [668.76, 486.88, 961.42, 371.9, 409.19, 336.3, 696.25, 661.32, 541.63, 405.88],
    2 / 3: [627.44, 459.14, 909.4, 357.14, 388.64, 319.37, 654.32, 618.54, 521.61, 378.24],
}

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def acceptance_report():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def trapezoids(draw, lo=-1e3, hi=1e3, positive=False):
    """Sorted 4-tuples, with a fair chance of collapsed shoulders or core."""
    if positive:
        lo = max(lo, 1e-3)
    vals = sorted(draw(st.lists(
        st.floats(lo, hi, allow_nan=False, allow_infinity=False), min_size=4, max_size=4
    )))
    collapse = draw(st.sampled_from(["none", "left", "right", "core", "crisp"]))
    r1, r2, r3, r4 = vals
    if collapse == "left":
        r1 = r2
    elif collapse == "right":
        r4 = r3
    elif collapse == "core":
        r3 = r2
    elif collapse == "crisp":
        r1 = r2 = r3 = r4
    return TrapezoidalFuzzyNumber(r1, r2, r3, r4)


lambdas = st.floats(0.0, 1.0, allow_nan=False)
