import random
import sys
from pathlib import Path

import pytest

from arithgraph.graph import build_graph, cycle_graph, path_graph
from arithgraph.morphism import analyze_harmonic, build_morphism
from arithgraph.workspace import bundled_workspace, bundled_workspace_path

sys.path.insert(0, str(Path(__file__).parent))

CORPUS_SEED = 20240917


@pytest.fixture(scope="session")
def ws():
    return bundled_workspace()


@pytest.fixture(scope="session")
def fixture_path():
    return bundled_workspace_path()


@pytest.fixture(scope="session")
def C3(ws):
    return ws.graph("C3")


@pytest.fixture(scope="session")
def W5(ws):
    return ws.graph("W5")


@pytest.fixture(scope="session")
def W7(ws):
    return ws.graph("W7")


@pytest.fixture(scope="session")
def K4(ws):
    return ws.graph("K4")


@pytest.fixture(scope="session")
def band8(ws):
    return ws.graph("Band8")


@pytest.fixture(scope="session")
def phi(ws):
    """Harmonic W5 -> C3 morphism of the worked example."""
    return analyze_harmonic(ws.morphism("phi").morphism)


@pytest.fixture(scope="session")
def psi(ws):
    """W7 -> K4, hub to hub, rim wrapped twice around the K4 rim."""
    return analyze_harmonic(ws.morphism("psi").morphism)


@pytest.fixture(scope="session")
def R1S1(ws):
    return ws.structure("R1S1").structure


def identity_morphism(g):
    return analyze_harmonic(build_morphism(g, g, list(range(g.n))))


def random_connected_graphs(count, max_n=6, seed=CORPUS_SEED):
    """Seeded corpus of connected graphs with 2..max_n vertices."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_n)
        p = rng.uniform(0.3, 0.8)
        labels = [f"u{i}" for i in range(n)]
        edges = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        try:
            out.append(build_graph(labels, edges))
        except Exception:
            continue
    return out


def small_families():
    from arithgraph.graph import complete_graph, star_graph, wheel_graph

    return (
        [cycle_graph(n) for n in range(3, 7)]
        + [path_graph(n) for n in range(2, 7)]
        + [star_graph(4), star_graph(5), complete_graph(4), wheel_graph(5)]
    )


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
