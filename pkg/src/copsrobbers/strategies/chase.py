"""Chasing function and train-chasing.

A train of ``k`` cops starts on one vertex ``v_1``. On turn ``i`` the cops
pick ``v_{i+1}``, the chasing-function step from ``v_i`` towards the robber
inside the current territory ``H_i``, and cut ``X_i``, the other
neighbours of ``v_i`` in ``H_i``. The new territory ``H_{i+1}`` is the
component of ``v_{i+1}`` in ``H_i - X_i``. Cop ``c`` occupies anchor
``v_{min(c, i) + 1}``, so after ``k - 1`` turns the cops sit on
``v_1 .. v_k`` one apiece. Every exit from the territory then lands on a
cut vertex adjacent to an occupied anchor.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from ..graph import Graph, GraphError, bfs_distances, geodesic


def theta(u: int, v: int, H: Graph, allowed: frozenset[int] | None = None) -> int:
    """Smallest-index neighbour of ``u`` on a ``(u, v)``-geodesic.

    ``H`` may be a host graph with ``allowed`` naming the vertex set of the
    induced subgraph to search in.
    """
    dist = bfs_distances(H, v, allowed)
    if u not in dist or (allowed is not None and u not in allowed):
        raise GraphError(f"{u} and {v} are not connected in the territory")
    if dist[u] < 2:
        raise GraphError(f"chasing needs distance >= 2, got {dist[u]}")
    return min(w for w in H.adj[u] if dist.get(w) == dist[u] - 1)


@dataclass(frozen=True)
class TrainChaseState:
    anchors: tuple[int, ...]
    cuts: tuple[tuple[int, ...], ...]
    territory: frozenset[int]

    @property
    def step(self) -> int:
        return len(self.cuts)


def chase_start(territory: frozenset[int], v1: int) -> TrainChaseState:
    if v1 not in territory:
        raise GraphError("the first anchor must lie in the territory")
    return TrainChaseState((v1,), (), territory)


def chase_advance(G: Graph, cs: TrainChaseState, robber: int) -> TrainChaseState:
    """One chasing step against the robber's current vertex."""
    if robber not in cs.territory:
        raise GraphError(f"robber at {robber} is outside the territory")
    v = cs.anchors[-1]
    nxt = theta(v, robber, G, cs.territory)
    cut = tuple(sorted((G.adj[v] & cs.territory) - {nxt}))
    remaining = cs.territory - set(cut)
    territory = frozenset(bfs_distances(G, nxt, remaining))
    return TrainChaseState(cs.anchors + (nxt,), cs.cuts + (cut,), territory)


def train_positions(cs: TrainChaseState, k: int) -> tuple[int, ...]:
    """Cop ``c`` sits on anchor ``min(c, step)``, capped at the last occupied one."""
    last = min(cs.step, k - 1)
    return tuple(cs.anchors[min(c, last)] for c in range(k))


def check_chase_invariants(
    G: Graph, cs: TrainChaseState, robber: int | None = None, cops: tuple[int, ...] | None = None
) -> list[str]:
    """Violated chase properties, as human-readable strings (empty if none)."""
    problems = []
    territory = cs.territory
    # territory is an induced, connected subgraph holding the newest anchor
    if not territory <= frozenset(range(G.n)):
        problems.append("territory has vertices outside the host")
    if cs.anchors[-1] not in territory:
        problems.append("newest anchor outside the territory")
    elif frozenset(bfs_distances(G, cs.anchors[-1], territory)) != territory:
        problems.append("territory is not connected")
    # every edge leaving the territory ends in a cut
    cut_union = set().union(*cs.cuts) if cs.cuts else set()
    for u in territory:
        for w in G.adj[u]:
            if w not in territory and w not in cut_union:
                problems.append(f"edge {u}-{w} leaves the territory outside the cuts")
    # anchors induce a path in order
    a = cs.anchors
    if len(set(a)) != len(a):
        problems.append("anchors repeat")
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            adjacent = a[j] in G.adj[a[i]]
            if adjacent != (j == i + 1):
                problems.append(f"anchors {a[i]} and {a[j]} break the induced path")
    for i, cut in enumerate(cs.cuts):
        if not set(cut) <= G.adj[a[i]]:
            problems.append(f"cut {i + 1} is not inside the anchor's neighbourhood")
    if cops is not None and cops != train_positions(cs, len(cops)):
        problems.append("cops are not on their anchors")
    if robber is not None and robber not in territory:
        problems.append(f"robber at {robber} outside the territory")
    return problems


@dataclass
class ChaseOutcome:
    captured: bool
    turns: int
    state: TrainChaseState
    robber: int
    cops: tuple[int, ...]
    history: list[TrainChaseState]
    violations: list[str]


def train_chase(
    G: Graph,
    k: int,
    robber: Callable[[tuple[int, ...], int], int],
    start: int = 0,
    robber_start: int | None = None,
    place_robber: Callable[[tuple[int, ...]], int] | None = None,
) -> ChaseOutcome:
    """Run ``k`` cop turns of train-chasing against a robber callback.

    ``robber(cops, position)`` returns the robber's move after each cop
    turn; it must stay in the closed neighbourhood. The robber's first
    vertex comes from ``robber_start`` or ``place_robber(cops)``.
    Invariants are checked after every turn and reported in ``violations``.
    """
    if k < 1:
        raise GraphError("train-chasing needs at least one cop")
    cops = (start,) * k
    r = robber_start if robber_start is not None else place_robber(cops)  # type: ignore[misc]
    G.check_vertex(r)
    cs = chase_start(frozenset(range(G.n)), start)
    history = [cs]
    violations: list[str] = []
    for turn in range(1, k + 1):
        if any(r == c or r in G.adj[c] for c in cops):
            return ChaseOutcome(True, turn, cs, r, cops, history, violations)
        cs = chase_advance(G, cs, r)
        history.append(cs)
        cops = train_positions(cs, k)
        move = robber(cops, r)
        if move not in G.closed_neighborhood(r):
            raise GraphError(f"illegal robber move {r} -> {move}")
        r = move
        if r in cops:
            return ChaseOutcome(True, turn, cs, r, cops, history, violations)
        caught_next = any(r in G.adj[c] for c in cops)
        for p in check_chase_invariants(G, cs, None if caught_next else r, cops):
            violations.append(f"turn {turn}: {p}")
    return ChaseOutcome(False, k, cs, r, cops, history, violations)
