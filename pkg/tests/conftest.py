import random
from fractions import Fraction

import pytest

from arrpi import fixtures, load_arrangement, load_wiring
from arrpi.arrangement import Arrangement, arrangement_from_dict


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One line per acceptance criterion, printed after the run."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, detail in RESULTS:
        terminalreporter.write_line(f"PASS  {criterion}: {detail}")
    terminalreporter.write_line(
        "NOTE  expected failures cover the places the published tables "
        "contradict themselves; their reasons carry the analysis"
    )


@pytest.fixture(scope="session")
def didactic_arr():
    return load_arrangement(fixtures.path("didactic.arr.json"))


@pytest.fixture(scope="session")
def didactic_wd():
    return load_wiring(fixtures.path("didactic.wd.json"))


@pytest.fixture(scope="session")
def maclane_arr():
    return load_arrangement(fixtures.path("maclane.arr.json"))


@pytest.fixture(scope="session")
def maclane_wd():
    return load_wiring(fixtures.path("maclane.wd.json"))


@pytest.fixture(scope="session")
def triangle_arr():
    return load_arrangement(fixtures.path("triangle.arr.json"))


@pytest.fixture(scope="session")
def nearpencil_arr():
    return load_arrangement(fixtures.path("nearpencil.arr.json"))


@pytest.fixture(scope="session")
def twolines_arr():
    return load_arrangement(fixtures.path("twolines.arr.json"))


def random_real_arrangement(rng: random.Random, max_affine: int = 5) -> Arrangement:
    """A random rational affine arrangement plus the line z = 0 at infinity.

    Mixes generic lines with, sometimes, a pencil of three concurrent lines,
    so multiplicities above two occur.
    """
    while True:
        n = rng.randint(2, max_affine)
        rows = [[["0", "0"], ["0", "0"], ["1", "0"]]]
        lines = []
        if n >= 3 and rng.random() < 0.5:
            # three lines through one random rational point
            px, py = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
            slopes = rng.sample([-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-1, 2)], 3)
            for m in slopes:
                m = Fraction(m)
                lines.append((-m, Fraction(1), m * px - py))
            n -= 3
        for _ in range(n):
            m = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2, 3]))
            b = Fraction(rng.randint(-4, 4), rng.choice([1, 2]))
            lines.append((-m, Fraction(1), -b))
        for a, b, c in lines:
            rows.append([[str(a), "0"], [str(b), "0"], [str(c), "0"]])
        data = {"field": {"d": 1}, "infinity": 0, "lines": rows}
        try:
            return arrangement_from_dict(data)
        except Exception:
            continue  # coincident lines: draw again
