import itertools

import pytest

from qcl.quiver import Quiver

# acceptance outcomes, filled in by test_acceptance.py and printed at the end
ACCEPTANCE: dict[str, tuple[str, bool]] = {}


def quivers(max_n):
    for n in range(max_n + 1):
        for deltas in itertools.product((1, -1), repeat=n):
            yield Quiver(deltas)


def grid(max_n, max_entry):
    """Every (quiver, dims) with n <= max_n and dimensions in 0..max_entry."""
    for q in quivers(max_n):
        for dims in itertools.product(range(max_entry + 1), repeat=q.n + 1):
            yield q, dims


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k[2:])):
        name, ok = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key} {name}: {'PASS' if ok else 'FAIL'}")


@pytest.fixture
def rank1():
    """One rightward arrow, dims (2, 2), the rank-one orbit."""
    from qcl.quiver import Orbit

    return Quiver.parse(">"), (2, 2), Orbit(1, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
