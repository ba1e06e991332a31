
import numpy as np
import pytest

from oracles import PolyGF

ACCEPTANCE: dict[str, str] = {}


def oracle_for(field):
    return PolyGF(field.p, field.modulus)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
            terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE[key]}")
