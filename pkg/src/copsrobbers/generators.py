"""Named graph families and a reproducible G(n, p) sampler.

Spec strings have the form ``name`` or ``name:arg,arg,...``, for example
``path:9``, ``complete_bipartite:2,3``, ``spider:2,2,1``, ``gnp:12,0.3,42``
or ``circulant:8,1,3``.

``gnp`` draws one uniform double per vertex pair ``(i, j)``, ``i < j``, in
lexicographic order from a splitmix64 stream seeded with ``seed``; the pair is
an edge iff the draw is below ``p``. A draw is the top 53 bits of the 64-bit
output scaled by ``2**-53``.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, GraphError, build_graph, components, induced

_MASK64 = (1 << 64) - 1


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def uniform_stream(seed: int) -> Iterator[float]:
    for z in splitmix64(seed):
        yield (z >> 11) * 2.0**-53


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a >= 1 and b >= 1, "complete bipartite needs both sides >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 1 and all(p >= 1 for p in parts), "parts must be >= 1")
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if owner[i] != owner[j]])


def star(k: int) -> Graph:
    """``K_{1,k}`` with centre 0."""
    _need(k >= 1, "star needs k >= 1")
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def prism(n: int) -> Graph:
    """``C_n x K_2``: cycles on ``0..n-1`` and ``n..2n-1`` joined by a matching."""
    _need(n >= 3, "prism needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def spider(*legs: int) -> Graph:
    """Centre 0 with pendant paths holding ``legs[i]`` vertices each."""
    _need(all(length >= 0 for length in legs), "leg lengths must be >= 0")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def circulant(n: int, *offsets: int) -> Graph:
    _need(n >= 1, "circulant needs n >= 1")
    edges = set()
    for d in offsets:
        _need(d % n != 0, f"offset {d} is a multiple of n")
        for i in range(n):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    return build_graph(n, sorted(edges))


def gnp(n: int, p: float, seed: int) -> Graph:
    _need(n >= 1, "gnp needs n >= 1")
    _need(0.0 <= p <= 1.0, "p must lie in [0, 1]")
    draws = uniform_stream(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if next(draws) < p]
    return build_graph(n, edges)


def largest_component(G: Graph) -> Graph:
    """Induced subgraph on the largest component (ties: smallest vertex)."""
    best = max(components(G), key=len)
    return induced(G, best)[0]


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Largest component of ``gnp(n, p, seed)``."""
    return largest_component(gnp(n, p, seed))


_FAMILIES = {
    "path": (path, (int,)),
    "cycle": (cycle, (int,)),
    "complete": (complete, (int,)),
    "complete_bipartite": (complete_bipartite, (int, int)),
    "complete_multipartite": (complete_multipartite, None),
    "star": (star, (int,)),
    "petersen": (petersen, ()),
    "prism": (prism, (int,)),
    "spider": (spider, None),
    "gnp": (gnp, (int, float, int)),
    "circulant": (circulant, None),
}


def generate(spec: str) -> Graph:
    """Build the graph named by a spec string such as ``cycle:6``."""
    name, _, rest = spec.strip().partition(":")
    name = name.strip().lower()
    if name not in _FAMILIES:
        raise GraphError(f"unknown graph family {name!r}")
    func, types = _FAMILIES[name]
    raw = [a.strip() for a in rest.split(",")] if rest.strip() else []
    try:
        if types is None:
            args = [int(a) for a in raw]
        else:
            if len(raw) != len(types):
                raise GraphError(f"{name} takes {len(types)} argument(s), got {len(raw)}")
            args = [t(a) for t, a in zip(types, raw)]
    except ValueError as exc:
        raise GraphError(f"bad arguments in graph spec {spec!r}") from exc
    if name == "circulant":
        _need(len(args) >= 1, "circulant needs n")
    return func(*args)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise GraphError(message)
