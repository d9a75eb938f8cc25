from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from critcyc.graph_core import Graph, complete_graph, cycle_graph, join, wheel_graph
from critcyc.constructors import gallai_regular, hj7

# (name, graph factory, k) for the small verified critical graphs
CORPUS = [
    ("K4", lambda: complete_graph(4), 4),
    ("W5", lambda: wheel_graph(5), 4),
    ("HJ7", hj7, 4),
    ("GA13", lambda: gallai_regular(4, 1), 4),
    ("K5", lambda: complete_graph(5), 5),
    ("C5+K2", lambda: join(cycle_graph(5), complete_graph(2)), 5),
    ("gallai51", lambda: gallai_regular(5, 1), 5),
]
CORPUS_IDS = [c[0] for c in CORPUS]


@pytest.fixture(params=CORPUS, ids=CORPUS_IDS)
def critical(request):
    name, make, k = request.param
    return name, make(), k


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def brute_circumference(g: Graph) -> int:
    """Longest cycle length by enumerating every simple cycle (small graphs only)."""
    best = 0
    for c in nx.simple_cycles(to_nx(g)):
        best = max(best, len(c))
    return best


def brute_longest_path(g: Graph) -> int:
    best = 0
    adj = {v: g.neighbors(v) for v in g.vertices}

    def walk(v, seen, length):
        nonlocal best
        best = max(best, length)
        for y in adj[v]:
            if y not in seen:
                seen.add(y)
                walk(y, seen, length + 1)
                seen.remove(y)

    for v in g.vertices:
        walk(v, {v}, 0)
    return best


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected:
        # a random spanning tree keeps the graph connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            if (u, v) not in chosen:
                chosen.append((u, v))
    return Graph(range(n), chosen)


# acceptance lines collected by tests/test_acceptance.py
RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
