"""Forbidden induced subgraphs: named patterns, induced search, classification.

Pattern vertex layouts
----------------------
claw     0 centre; leaves 1, 2, 3
bull     triangle 0-1-2; pendants 3-0, 4-1
net      triangle 0-1-2; pendants 3-0, 4-1, 5-2
antenna  edges 0-1, 1-2, 1-3, 2-3, 2-4, 3-5, 4-5: a house whose square is
         2-3-5-4 and whose roof apex is 1, with the extra pendant 0 on the
         apex
path k   0-1-...-(k-1)

Family specs (CLI grammar): comma-separated members, each a ``+``-joined
disjoint union of ``claw``, ``bull``, ``net``, ``antenna``, ``pK`` (path on K
vertices), ``genclaw:a,b,c`` or ``gennet:a,b,c``. Bare integers after a
``genclaw:``/``gennet:`` token belong to that token, so ``claw,gennet:1,1,0``
has two members.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .graph import INF, Graph, GraphError, build_graph, components, diameter, induced, is_connected


class HypothesisViolation(ValueError):
    """A family member breaks the diameter / connectivity precondition."""


@dataclass(frozen=True)
class Pattern:
    graph: Graph
    name: str | None = None

    @property
    def n(self) -> int:
        return self.graph.n

    def __str__(self) -> str:
        return self.name or repr(self.graph)


Family = list[Pattern]


class Kind(Enum):
    PATH = "path"
    GENERALIZED_CLAW = "generalized_claw"
    GENERALIZED_NET = "generalized_net"
    FOREST_OF_PATHS = "forest_of_paths"
    OTHER = "other"


@dataclass(frozen=True)
class PatternClass:
    kind: Kind
    params: tuple[int, ...] = field(default=())


# -- constructors -----------------------------------------------------------

ANTENNA_EDGES = [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 5), (4, 5)]


def path_pattern(k: int) -> Pattern:
    if k < 1:
        raise GraphError("path pattern needs k >= 1")
    return Pattern(build_graph(k, [(i, i + 1) for i in range(k - 1)]), f"p{k}")


def _attach_paths(core: Graph, roots: list[int], lengths: tuple[int, ...]) -> Graph:
    edges = core.edges()
    nxt = core.n
    for root, length in zip(roots, lengths):
        prev = root
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def gen_claw(n1: int, n2: int, n3: int) -> Pattern:
    """Centre 0 with pendant paths of ``n1``, ``n2``, ``n3`` vertices."""
    lengths = (n1, n2, n3)
    if min(lengths) < 0:
        raise GraphError("leg lengths must be >= 0")
    g = _attach_paths(Graph(1, [()]), [0, 0, 0], lengths)
    return Pattern(g, f"genclaw:{n1},{n2},{n3}")


def gen_net(n1: int, n2: int, n3: int) -> Pattern:
    """Triangle 0-1-2 with a pendant path of ``n_i`` vertices at corner ``i``."""
    lengths = (n1, n2, n3)
    if min(lengths) < 0:
        raise GraphError("attachment lengths must be >= 0")
    tri = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    return Pattern(_attach_paths(tri, [0, 1, 2], lengths), f"gennet:{n1},{n2},{n3}")


def named_pattern(name: str) -> Pattern:
    key = name.strip().lower()
    if key == "claw":
        return Pattern(gen_claw(1, 1, 1).graph, "claw")
    if key == "bull":
        return Pattern(gen_net(1, 1, 0).graph, "bull")
    if key == "net":
        return Pattern(gen_net(1, 1, 1).graph, "net")
    if key == "antenna":
        return Pattern(build_graph(6, ANTENNA_EDGES), "antenna")
    m = re.fullmatch(r"(?:p|path\s*)(\d+)", key)
    if m:
        return path_pattern(int(m.group(1)))
    raise GraphError(f"unknown pattern {name!r}")


def disjoint_union(patterns: list[Pattern]) -> Pattern:
    edges = []
    offset = 0
    for p in patterns:
        edges += [(u + offset, v + offset) for u, v in p.graph.edges()]
        offset += p.n
    name = "+".join(str(p) for p in patterns)
    return Pattern(build_graph(offset, edges), name)


def parse_pattern(spec: str) -> Pattern:
    parts = [s.strip() for s in spec.split("+")]
    pats = []
    for part in parts:
        head, _, args = part.partition(":")
        head = head.strip().lower()
        if head in ("genclaw", "gennet"):
            try:
                nums = tuple(int(a) for a in args.split(","))
            except ValueError as exc:
                raise GraphError(f"bad parameters in {part!r}") from exc
            if len(nums) != 3:
                raise GraphError(f"{head} takes three parameters")
            pats.append((gen_claw if head == "genclaw" else gen_net)(*nums))
        elif args:
            raise GraphError(f"pattern {head!r} takes no parameters")
        else:
            pats.append(named_pattern(head))
    if not pats:
        raise GraphError("empty pattern spec")
    return pats[0] if len(pats) == 1 else disjoint_union(pats)


def parse_family(spec: str) -> Family:
    tokens = [t.strip() for t in spec.split(",") if t.strip()]
    members: list[str] = []
    for tok in tokens:
        last = members[-1].rsplit("+", 1)[-1] if members else ""
        if tok[0].isdigit() and ":" in last and last.count(",") < 2:
            members[-1] += "," + tok
        else:
            members.append(tok)
    if not members:
        raise GraphError("empty family spec")
    return [parse_pattern(m) for m in members]


# -- induced subgraph search -------------------------------------------------


def find_induced(G: Graph, H: Pattern | Graph) -> list[int] | None:
    """Lexicographically least induced embedding of ``H`` into ``G``.

    Returns ``phi`` as a list (``phi[a]`` is the host vertex of pattern
    vertex ``a``) such that ``phi[a]phi[b]`` is an edge exactly when ``ab``
    is, or ``None``.
    """
    P = H.graph if isinstance(H, Pattern) else H
    k = P.n
    if k > G.n:
        return None
    if k == 0:
        return []
    hmask = G.masks
    full = (1 << G.n) - 1
    pdeg = P.degrees()
    hdeg = G.degrees()
    # earlier pattern vertices split into neighbours / non-neighbours of a
    before_adj = [[b for b in range(a) if b in P.adj[a]] for a in range(k)]
    before_non = [[b for b in range(a) if b not in P.adj[a]] for a in range(k)]
    phi = [0] * k

    def extend(a: int, used: int) -> bool:
        if a == k:
            return True
        cand = full & ~used
        for b in before_adj[a]:
            cand &= hmask[phi[b]]
        for b in before_non[a]:
            cand &= ~hmask[phi[b]]
        need = pdeg[a]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if hdeg[v] < need:
                continue
            phi[a] = v
            if extend(a + 1, used | low):
                return True
        return False

    return list(phi) if extend(0, 0) else None


def is_family_free(G: Graph, F: Family) -> bool:
    return all(find_induced(G, H) is None for H in F)


# -- classification ----------------------------------------------------------


def _is_path_graph(G: Graph) -> bool:
    return is_connected(G) and G.m == G.n - 1 and max(G.degrees(), default=0) <= 2


def _leg_lengths(G: Graph, roots: dict[int, set[int]], blocked: set[int]) -> dict[int, int] | None:
    """Length of the pendant path hanging from each root, or None if not a path."""
    out = {}
    for root in roots:
        outside = [w for w in G.adj[root] if w not in blocked]
        if len(outside) > 1:
            return None
        length = 0
        prev, cur = root, outside[0] if outside else None
        while cur is not None:
            length += 1
            nxt = [w for w in G.adj[cur] if w != prev]
            if len(nxt) > 1 or any(w in blocked for w in nxt):
                return None
            prev, cur = cur, (nxt[0] if nxt else None)
        out[root] = length
    return out


def classify_pattern(H: Pattern | Graph) -> PatternClass:
    G = H.graph if isinstance(H, Pattern) else H
    if G.n == 0:
        return PatternClass(Kind.OTHER)
    if _is_path_graph(G):
        return PatternClass(Kind.PATH, (G.n,))
    if not is_connected(G):
        parts = components(G)
        if all(_is_path_graph(induced(G, p)[0]) for p in parts):
            return PatternClass(Kind.FOREST_OF_PATHS, tuple(sorted((len(p) for p in parts), reverse=True)))
        return PatternClass(Kind.OTHER)
    degs = G.degrees()
    if G.m == G.n - 1:
        big = [v for v in range(G.n) if degs[v] >= 3]
        if len(big) == 1 and degs[big[0]] == 3:
            c = big[0]
            legs = []
            for start in sorted(G.adj[c]):
                length, prev, cur = 1, c, start
                while True:
                    nxt = [w for w in G.adj[cur] if w != prev]
                    if not nxt:
                        break
                    prev, cur = cur, nxt[0]
                    length += 1
                legs.append(length)
            return PatternClass(Kind.GENERALIZED_CLAW, tuple(sorted(legs, reverse=True)))
        return PatternClass(Kind.OTHER)
    if G.m == G.n:
        tri = _unique_triangle_cycle(G)
        if tri is not None:
            legs = _leg_lengths(G, {t: set() for t in tri}, set(tri))
            if legs is not None:
                return PatternClass(Kind.GENERALIZED_NET, tuple(sorted(legs.values(), reverse=True)))
    return PatternClass(Kind.OTHER)


def _unique_triangle_cycle(G: Graph) -> tuple[int, int, int] | None:
    """The cycle of a connected unicyclic graph if it is a triangle."""
    # strip leaves until only the cycle remains
    deg = G.degrees()
    alive = set(range(G.n))
    stack = [v for v in alive if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in G.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    if len(alive) != 3:
        return None
    a, b, c = sorted(alive)
    return (a, b, c)


def has_degree_three_vertex(G: Graph) -> bool:
    return any(d == 3 for d in G.degrees())


def _check_hypothesis(F: Family, k: int, per_component: bool) -> None:
    if not F:
        raise HypothesisViolation("family must be non-empty")
    for p in F:
        if per_component:
            for part in components(p.graph):
                d = diameter(induced(p.graph, part)[0])
                if d >= k:
                    raise HypothesisViolation(f"a component of {p} has diameter {d} >= {k}")
        else:
            d = diameter(p.graph)
            if d == INF:
                raise HypothesisViolation(f"{p} is disconnected")
            if d >= k:
                raise HypothesisViolation(f"{p} has diameter {d} >= {k}")


def predict_cop_bounded(F: Family, k: int) -> bool:
    """Whether F-free graphs have bounded cop number (connected members)."""
    _check_hypothesis(F, k, per_component=False)
    kinds = {classify_pattern(p).kind for p in F}
    return Kind.PATH in kinds or {Kind.GENERALIZED_CLAW, Kind.GENERALIZED_NET} <= kinds


def _components_within(G: Graph, allowed: set[Kind]) -> bool:
    return all(classify_pattern(induced(G, part)[0]).kind in allowed for part in components(G))


def predict_cop_bounded_components(F: Family, k: int) -> bool:
    """Same question when only the components of members have bounded diameter."""
    _check_hypothesis(F, k, per_component=True)
    if any(classify_pattern(p).kind in (Kind.PATH, Kind.FOREST_OF_PATHS) for p in F):
        return True
    claw_side = any(
        has_degree_three_vertex(p.graph)
        and _components_within(p.graph, {Kind.PATH, Kind.GENERALIZED_CLAW})
        for p in F
    )
    net_side = any(
        has_degree_three_vertex(p.graph)
        and _components_within(p.graph, {Kind.PATH, Kind.GENERALIZED_NET})
        for p in F
    )
    return claw_side and net_side


# -- named families ----------------------------------------------------------


def family(*names: str) -> Family:
    return [parse_pattern(n) for n in names]


CL = ("claw",)
CL1 = ("claw", "bull")
CL2 = ("claw", "net", "antenna")
CL3 = ("claw", "net")
