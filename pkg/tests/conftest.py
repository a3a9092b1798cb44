import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from paraf.af import Framework
from paraf.generators import fixtures

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def fx():
    return fixtures()


@st.composite
def frameworks(draw, max_args=6):
    n = draw(st.integers(0, max_args))
    args = [f"x{i}" for i in range(n)]
    pairs = [(a, b) for a in args for b in args]
    attacks = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Framework.from_edges(args, attacks)


@st.composite
def framework_and_sets(draw, max_args=6, k=1):
    f = draw(frameworks(max_args=max_args))
    sets = [draw(st.integers(0, f.full)) for _ in range(k)]
    return (f, *(f.from_mask(m) for m in sets))


# -- acceptance reporting ------------------------------------------------------

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    ok = call.excinfo is None
    previous = _criteria.get(str(number))
    if previous is None or previous[1] == "PASS":
        _criteria[str(number)] = (title, "PASS" if ok else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=int):
        title, status = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
