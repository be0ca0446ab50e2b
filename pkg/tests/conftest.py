import pytest

from quasicyclic.gf import field_new
from quasicyclic.textio import bundled_path, load_code

EXAMPLE_GENERATORS = [
    (0, 52, 71, 109, 135, 141, 144),
    (0, 31, 45, 65, 87, 162, 167),
    (0, 62, 69, 79, 90, 130, 174),
    (0, 58, 60, 107, 108, 132, 161),
    (0, 16, 46, 59, 82, 137, 145),
]


@pytest.fixture(scope="session")
def f256():
    return field_new(2, 1, 8, [1, 0, 1, 1, 1, 0, 0, 0, 1])


@pytest.fixture(scope="session")
def f16():
    return field_new(2, 1, 4)


@pytest.fixture(scope="session")
def f64():
    return field_new(2, 1, 6)


@pytest.fixture(scope="session")
def f81():
    return field_new(3, 1, 4)


@pytest.fixture(scope="session")
def example_code():
    return load_code(bundled_path("example_gf256.code"))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
        terminalreporter.write_line(line)
