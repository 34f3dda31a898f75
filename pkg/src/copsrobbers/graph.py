"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertices."""


class Graph:
    """A finite simple undirected graph with dense integer vertices.

    Instances are immutable; ``adj[v]`` is a frozenset of the neighbours of
    ``v``. Use :func:`build_graph` to construct one from an edge list.
    """

    __slots__ = ("n", "adj", "_masks", "_hash")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise GraphError(f"adjacency has {len(adj)} rows for n={n}")
        rows = tuple(frozenset(row) for row in adj)
        for u, row in enumerate(rows):
            for v in row:
                if not 0 <= v < n:
                    raise GraphError(f"vertex {v} out of range for n={n}")
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if u not in rows[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows
        self._masks: tuple[int, ...] | None = None
        self._hash: int | None = None

    # -- basic queries ---------------------------------------------------

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self) -> int:
        return self.n

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in ascending order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks (bit ``v`` set iff adjacent)."""
        if self._masks is None:
            self._masks = tuple(sum(1 << v for v in row) for row in self.adj)
        return self._masks

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range for n={self.n}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges are merged."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {u})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def bfs_distances(
    G: Graph, source: int, allowed: frozenset[int] | set[int] | None = None
) -> dict[int, int]:
    """Distances from ``source`` to every reachable vertex.

    With ``allowed`` the search is confined to the induced subgraph on that
    vertex set (``source`` must belong to it).
    """
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in G.adj[u]:
            if w not in dist and (allowed is None or w in allowed):
                dist[w] = du
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> float:
    """Shortest-path length, or ``math.inf`` across components."""
    G.check_vertex(u)
    G.check_vertex(v)
    return bfs_distances(G, u).get(v, INF)


def geodesic(
    G: Graph, u: int, v: int, allowed: frozenset[int] | set[int] | None = None
) -> list[int]:
    """The lexicographically least shortest ``u``-``v`` path.

    Every step takes the smallest-index neighbour that is one step closer to
    ``v``, so the result is deterministic.
    """
    G.check_vertex(u)
    G.check_vertex(v)
    dist = bfs_distances(G, v, allowed)
    if u not in dist:
        raise GraphError(f"no path between {u} and {v}")
    path = [u]
    cur = u
    while cur != v:
        target = dist[cur] - 1
        cur = min(w for w in G.adj[cur] if dist.get(w) == target)
        path.append(cur)
    return path


def components(G: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen: set[int] = set()
    parts = []
    for s in range(G.n):
        if s not in seen:
            part = sorted(bfs_distances(G, s))
            seen.update(part)
            parts.append(part)
    return parts


def component_of(G: Graph, v: int, allowed: frozenset[int] | set[int]) -> frozenset[int]:
    """Vertex set of the component of ``v`` in ``G[allowed]``."""
    return frozenset(bfs_distances(G, v, allowed))


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(bfs_distances(G, 0)) == G.n


def eccentricity(G: Graph, v: int) -> float:
    dist = bfs_distances(G, v)
    return max(dist.values()) if len(dist) == G.n else INF


def diameter(G: Graph) -> float:
    """Largest eccentricity; ``math.inf`` for disconnected graphs."""
    if G.n == 0:
        return 0
    best = 0
    for v in range(G.n):
        e = eccentricity(G, v)
        if e == INF:
            return INF
        best = max(best, e)
    return best


def induced(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``S``, re-indexed in ascending order of ``S``.

    Returns the subgraph and the old-to-new vertex map.
    """
    members = sorted(set(S))
    for v in members:
        G.check_vertex(v)
    index = {v: i for i, v in enumerate(members)}
    adj = [[index[w] for w in G.adj[v] if w in index] for v in members]
    return Graph(len(members), adj), index


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    vs = list(S)
    return all(vs[j] in G.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def open_neighborhood(G: Graph, S: Iterable[int]) -> set[int]:
    """Vertices adjacent to some member of ``S`` (members included if adjacent)."""
    out: set[int] = set()
    for v in S:
        out |= G.adj[v]
    return out


def closed_neighborhood(G: Graph, S: Iterable[int]) -> set[int]:
    S = set(S)
    return open_neighborhood(G, S) | S


def validate(G: Graph) -> None:
    """Re-check the structural invariants; raises :class:`GraphError`."""
    Graph(G.n, G.adj)
