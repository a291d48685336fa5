import random

import pytest

from gparking import build_multigraph
from gparking.bijection import all_rankings
from gparking.corpus import all_multigraphs, random_connected_multigraph

FIG1_EDGES = [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]

# Table 1 of the worked example: f, Ord(f), Rea(f), critical set
TABLE1 = [
    ((-1, 0, 0, 0), (0, 1, 2, 3), (-1, 0, 0, 0), {0, 1, 2}),
    ((-1, 0, 0, 1), (0, 1, 2, 3), (-1, 0, 0, 1), {0, 1, 2}),
    ((-1, 0, 0, 2), (0, 1, 2, 3), (-1, 0, 0, 2), {0, 1, 2, 3}),
    ((-1, 0, 1, 0), (0, 1, 3, 2), (-1, 0, 0, 1), {0, 1, 2}),
    ((-1, 0, 1, 1), (0, 1, 3, 2), (-1, 0, 1, 1), {0, 1, 2, 3}),
    ((-1, 1, 0, 0), (0, 3, 1, 2), (-1, 0, 1, 0), {0, 1, 3}),
    ((-1, 1, 1, 0), (0, 3, 1, 2), (-1, 0, 1, 1), {0, 1, 2, 3}),
    ((-1, 2, 0, 0), (0, 3, 2, 1), (-1, 0, 0, 2), {0, 1, 2, 3}),
]
F = {i + 1: row[0] for i, row in enumerate(TABLE1)}

# Table 3: B(f), (b(f), w(f))
TABLE3 = [
    (set(), (0, 2)),
    (set(), (0, 1)),
    ({3}, (1, 0)),
    ({2}, (1, 1)),
    ({2, 3}, (2, 0)),
    ({3}, (1, 1)),
    ({2, 3}, (2, 0)),
    ({1, 2, 3}, (3, 0)),
]

FIG1_TUTTE = "x^3+2*x^2+x+2*x*y+y+y^2"
K4_TUTTE_TERMS = {(0, 3): 1, (0, 2): 3, (0, 1): 2, (1, 1): 4, (1, 0): 2, (2, 0): 3, (3, 0): 1}


@pytest.fixture(scope="session")
def gstar():
    return build_multigraph(4, FIG1_EDGES)


@pytest.fixture(scope="session")
def small_corpus():
    """Every connected multigraph on <= 4 vertices with <= 6 edges, loops and parallels included."""
    return list(all_multigraphs(4, 6))


def corpus_rankings(G):
    return list(all_rankings(G.n))


@pytest.fixture(scope="session")
def tiny_corpus():
    """<= 3 vertices, <= 4 edges: cheap enough for per-test exhaustive loops."""
    return list(all_multigraphs(3, 4))


@pytest.fixture(scope="session")
def random5():
    rng = random.Random(20240601)
    return [random_connected_multigraph(rng, 5, 8) for _ in range(200)]


# -- acceptance reporting --------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    key, title = mark.args
    prev = _criteria.get(key, (title, "PASS"))
    failed = report.failed or (report.when == "call" and report.skipped)
    _criteria[key] = (title, "FAIL" if failed or prev[1] == "FAIL" else "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria, key=int):
        title, status = _criteria[key]
        terminalreporter.write_line(f"{status}  criterion {key:>2}: {title}")
