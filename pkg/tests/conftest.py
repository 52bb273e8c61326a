import pytest

from wlgraph.cfi import build_cfi, k4_global
from wlgraph.graph import (
    complete_graph,
    cycle_graph,
    petersen_graph,
    random_graph,
)

# 50 seeded graphs, n <= 10, p in {0.3, 0.5}
RANDOM_SPECS = [(4 + seed % 7, (0.3, 0.5)[seed % 2], seed) for seed in range(50)]


def random_corpus():
    return [random_graph(n, p, seed) for n, p, seed in RANDOM_SPECS]


def named_corpus():
    h = k4_global()
    named = {f"C{n}": cycle_graph(n) for n in range(3, 9)}
    named.update(
        K4=complete_graph(4),
        K5=complete_graph(5),
        Petersen=petersen_graph(),
        G=build_cfi(h).product,
        G_twisted=build_cfi(h, [(1, 3)]).product,
    )
    return named


@pytest.fixture(scope="session")
def cfi_pair():
    h = k4_global()
    return build_cfi(h).product, build_cfi(h, [(1, 3)]).product


ACCEPTANCE_RESULTS: dict[str, bool] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
        status = "PASS" if ACCEPTANCE_RESULTS[name] else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
