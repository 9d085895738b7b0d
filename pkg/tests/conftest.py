import pytest
from hypothesis import strategies as st

from totalvis.graph import build_graph


@st.composite
def connected_graphs(draw, min_n=1, max_n=8):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)]
    extra = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(extra), max_size=len(extra)))
    edges += [e for e, k in zip(extra, keep) if k]
    return build_graph(n, edges)


@st.composite
def any_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return build_graph(n, [e for e, k in zip(slots, keep) if k])


# -- acceptance summary -----------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not rep.failed:
        return
    num, title = mark.args
    status = "PASS" if rep.passed else "FAIL"
    prev = _criteria.get(num)
    if prev is None or prev[1] == "PASS":
        _criteria[num] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, status = _criteria[num]
        terminalreporter.write_line(f"criterion {num:>2}: {status}  {title}")
