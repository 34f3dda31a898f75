import itertools

import pytest
from hypothesis import strategies as st

from copsrobbers.graph import build_graph, is_connected


@st.composite
def small_graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    G = build_graph(n, [e for e, b in zip(pairs, bits) if b])
    if connected and not is_connected(G):
        # chain the components so every draw is usable
        extra = [(v, v + 1) for v in range(n - 1)]
        G = build_graph(n, G.edges() + extra)
    return G


@pytest.fixture(scope="session")
def connected_upto6():
    from copsrobbers.enumerate import enumerate_connected

    return [G for n in range(1, 7) for G in enumerate_connected(n)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.LINES):
        terminalreporter.write_line(mod.LINES[number])
