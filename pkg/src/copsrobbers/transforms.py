"""Clique substitution and k-subdivision."""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph

# knots[v][i] is the vertex of K(G) matched to the i-th smallest neighbour of v
KnotMap = list[list[int]]


def clique_substitution(G: Graph) -> tuple[Graph, KnotMap]:
    """Replace every vertex by a clique of its degree.

    Knot vertices are numbered vertex by vertex, and within a knot by the
    sorted order of the original neighbours. For each original edge ``uv``
    the vertex of ``u``'s knot indexed by ``v`` is joined to the vertex of
    ``v``'s knot indexed by ``u``. Isolated vertices get empty knots.
    """
    knots: KnotMap = []
    slot: dict[tuple[int, int], int] = {}
    nxt = 0
    for v in range(G.n):
        knot = []
        for u in sorted(G.adj[v]):
            slot[v, u] = nxt
            knot.append(nxt)
            nxt += 1
        knots.append(knot)
    edges = []
    for knot in knots:
        edges += [(a, b) for i, a in enumerate(knot) for b in knot[i + 1 :]]
    edges += [(slot[u, v], slot[v, u]) for u, v in G.edges()]
    return build_graph(nxt, edges), knots


def subdivide(G: Graph, k: int) -> Graph:
    """Insert ``k`` new vertices inside every edge.

    Original vertices keep their labels; the internal vertices of the
    ``e``-th edge (edges in ascending ``(u, v)`` order) are
    ``n + e*k .. n + e*k + k - 1``, running from ``u`` towards ``v``.
    """
    if k < 0:
        raise GraphError("subdivision count must be >= 0")
    if k == 0:
        return G
    edges = []
    nxt = G.n
    for u, v in G.edges():
        chain = [u, *range(nxt, nxt + k), v]
        edges += list(zip(chain, chain[1:]))
        nxt += k
    return build_graph(nxt, edges)
