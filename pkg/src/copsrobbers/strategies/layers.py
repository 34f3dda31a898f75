"""Distance layers around an edge, and the structural checks on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..graph import Graph, GraphError, bfs_distances, induced


@dataclass(frozen=True)
class LayeredDecomposition:
    """Layers of ``H = G - U`` around ``u0``, where ``U = N(u0) - {u1}``.

    ``hprime`` is the vertex set of the component of ``u0`` in ``H`` and
    ``layers[i]`` holds the vertices at distance ``i`` from ``u0`` in ``H``.
    ``h`` is ``H`` itself with ``h_index`` mapping host to ``H`` labels.
    """

    host: Graph
    u0: int
    u1: int
    U: frozenset[int]
    h: Graph
    h_index: dict[int, int]
    hprime: frozenset[int]
    layers: tuple[tuple[int, ...], ...]

    def layer_of(self, v: int) -> int | None:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return None


def layered_decomposition(G: Graph, u0: int, u1: int) -> LayeredDecomposition:
    G.check_vertex(u0)
    G.check_vertex(u1)
    if u1 not in G.adj[u0]:
        raise GraphError(f"{u0} and {u1} are not adjacent")
    U = frozenset(G.adj[u0] - {u1})
    keep = frozenset(range(G.n)) - U
    h, h_index = induced(G, keep)
    dist = bfs_distances(G, u0, keep)
    depth = max(dist.values())
    layers = tuple(tuple(sorted(v for v, d in dist.items() if d == i)) for i in range(depth + 1))
    return LayeredDecomposition(G, u0, u1, U, h, h_index, frozenset(dist), layers)


@dataclass(frozen=True)
class LayerReport:
    variant: str
    ok: bool
    layer: int | None = None
    witness: tuple[int, ...] | None = None
    reason: str = ""


def _first_nonadjacent(G: Graph, S) -> tuple[int, int] | None:
    for a, b in combinations(sorted(S), 2):
        if b not in G.adj[a]:
            return (a, b)
    return None


def validate_layers(L: LayeredDecomposition, variant: str) -> LayerReport:
    """Check one of the four layer properties; failure carries a witness.

    a: distinct vertices of ``N_i`` (``i >= 2``) with a common neighbour in
       ``N_{i-1}`` are adjacent.
    b: each layer is a clique and is complete to the previous layer.
    c: each layer is a clique and has a vertex dominating the next layer.
    d: no layer holds three pairwise non-adjacent vertices.
    """
    G = L.host
    layers = L.layers
    if variant == "a":
        for i in range(2, len(layers)):
            for w in layers[i - 1]:
                common = [v for v in layers[i] if v in G.adj[w]]
                bad = _first_nonadjacent(G, common)
                if bad:
                    return LayerReport("a", False, i, (*bad, w), "non-adjacent pair with a common parent")
        return LayerReport("a", True)
    if variant == "b":
        for i, layer in enumerate(layers):
            bad = _first_nonadjacent(G, layer)
            if bad:
                return LayerReport("b", False, i, bad, "layer is not a clique")
            if i >= 1:
                for x in layer:
                    for y in layers[i - 1]:
                        if y not in G.adj[x]:
                            return LayerReport("b", False, i, (x, y), "layer not complete to previous")
        return LayerReport("b", True)
    if variant == "c":
        for i, layer in enumerate(layers):
            bad = _first_nonadjacent(G, layer)
            if bad:
                return LayerReport("c", False, i, bad, "layer is not a clique")
            if i + 1 < len(layers) and dominator(G, layer, layers[i + 1]) is None:
                return LayerReport("c", False, i, tuple(layers[i + 1]), "no vertex dominates the next layer")
        return LayerReport("c", True)
    if variant == "d":
        for i, layer in enumerate(layers):
            for trio in combinations(layer, 3):
                a, b, c = trio
                if b not in G.adj[a] and c not in G.adj[a] and c not in G.adj[b]:
                    return LayerReport("d", False, i, trio, "three independent vertices")
        return LayerReport("d", True)
    raise GraphError(f"unknown layer variant {variant!r}")


def dominator(G: Graph, layer, nxt) -> int | None:
    """Least vertex of ``layer`` adjacent to every vertex of ``nxt``."""
    for x in layer:
        if all(y in G.adj[x] for y in nxt):
            return x
    return None


def greedy_independent_dominator(G: Graph, layer) -> tuple[int, ...]:
    """Lexicographically least maximal independent set of ``layer``."""
    chosen: list[int] = []
    for v in sorted(layer):
        if all(v not in G.adj[c] for c in chosen):
            chosen.append(v)
    return tuple(chosen)
