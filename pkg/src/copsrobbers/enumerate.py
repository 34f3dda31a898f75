"""Small-graph canonical forms and isomorph-free enumeration.

The canonical code of a graph is the minimum of its upper-triangle
adjacency bit string, read in graph6 order, over the leaves of an
individualisation-refinement tree. Each node of the tree is an ordered
colouring made stable by colour refinement; a node branches by singling
out, in turn, every vertex of its first non-singleton cell. Leaves are
discrete colourings, that is vertex orderings. Refinement commutes with
relabelling, so the set of leaf codes and hence its minimum are
isomorphism invariants.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from functools import lru_cache

from .graph import Graph, GraphError

MAX_ENUMERATION_ORDER = 7


def refine_colors(G: Graph, colors: list[int] | None = None) -> list[int]:
    """Stable colour refinement; colours are ranks that refine the input order.

    Starts from degrees when ``colors`` is not given.
    """
    colors = G.degrees() if colors is None else list(colors)
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in G.adj[v]))) for v in range(G.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranks[s] for s in sigs]
        if len(ranks) == count:
            return colors
        count = len(ranks)


def _code(G: Graph, order: tuple[int, ...]) -> int:
    adj = G.adj
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (order[i] in row)
    return code


def canonical_code(G: Graph) -> tuple[int, int]:
    """``(n, code)``; equal iff the graphs are isomorphic."""
    return _canonical(G)[0]


def canonical_form(G: Graph) -> Graph:
    """The isomorphic copy of ``G`` relabelled by its canonical ordering."""
    _, order = _canonical(G)
    pos = {v: i for i, v in enumerate(order)}
    return Graph(G.n, [[pos[w] for w in G.adj[v]] for v in order])


def _canonical(G: Graph) -> tuple[tuple[int, int], tuple[int, ...]]:
    if G.n == 0:
        return (0, 0), ()
    best: list = [None, ()]

    def search(colors: list[int]) -> None:
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        split = min((c for c, k in sizes.items() if k > 1), default=None)
        if split is None:
            order = tuple(sorted(range(G.n), key=colors.__getitem__))
            code = _code(G, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        for v in range(G.n):
            if colors[v] == split:
                # v goes first within its cell
                search(refine_colors(G, [2 * c + (w != v) for w, c in enumerate(colors)]))

    search(refine_colors(G))
    return (G.n, best[0]), best[1]


def add_vertex(G: Graph, neighbours: int) -> Graph:
    """``G`` plus a vertex ``n`` adjacent to the bitmask ``neighbours``."""
    new = G.n
    adj = [set(row) for row in G.adj]
    adj.append({v for v in range(G.n) if neighbours >> v & 1})
    for v in adj[new]:
        adj[v].add(new)
    return Graph(G.n + 1, adj)


def enumerate_hereditary(
    n: int, accept: Callable[[Graph], bool] = lambda G: True
) -> list[Graph]:
    """All connected graphs on ``n`` vertices in a hereditary class.

    ``accept`` must describe a class closed under induced subgraphs (for
    example an H-free class). Every connected member has a non-cut vertex
    whose deletion leaves a smaller connected member, so the members are
    grown one vertex at a time. Results are canonical representatives
    sorted by canonical code.
    """
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    level = [Graph(1, [()])] if accept(Graph(1, [()])) else []
    for size in range(1, n):
        found: dict[tuple[int, int], Graph] = {}
        for G in level:
            for mask in range(1, 1 << size):
                H = add_vertex(G, mask)
                if not accept(H):
                    continue
                key, order = _canonical(H)
                if key not in found:
                    pos = {v: i for i, v in enumerate(order)}
                    found[key] = Graph(H.n, [[pos[w] for w in H.adj[v]] for v in order])
        level = [found[k] for k in sorted(found)]
    return level


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_hereditary(n))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Pairwise non-isomorphic connected graphs on ``n <= 7`` vertices."""
    if n > MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration is capped at n={MAX_ENUMERATION_ORDER}")
    if n < 1:
        raise GraphError("enumeration needs n >= 1")
    yield from _connected(n)
