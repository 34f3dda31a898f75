"""``4n`` cops against graphs with no induced ``n``-claw and no ``n``-net.

The cops first train-chase with all ``4n`` cops, ending on an induced
path ``v_1 .. v_{4n}`` plus a gateway ``alpha``, the next vertex towards
the robber. The path is cut into segments of ``n`` vertices. Throughout,
segment 1 and the last two segments stay occupied. Any vertex a
territory vertex shares with a middle segment's neighbourhood is then
also adjacent to an occupied segment. That frees one segment of ``n``
cops per phase. Those cops walk along the path to ``alpha`` and
train-chase from there through the robber's territory. This appends a
new segment and yields a new gateway. The territory, the robber's
component of ``G - N[path]``, shrinks every phase.

The coverage condition is re-checked at each phase; a failure raises
:class:`StrategyError` since it cannot happen on a member of the class.
"""

from __future__ import annotations

from typing import NamedTuple

from ..graph import Graph, GraphError, bfs_distances, closed_neighborhood, open_neighborhood
from ..patterns import gen_claw, gen_net
from .base import DONE, CopStrategy, StrategyError, require_member
from .chase import TrainChaseState, chase_advance, chase_start, train_positions


class ClawNetState(NamedTuple):
    positions: tuple[int, ...]
    mode: str
    path: tuple[int, ...] = ()
    segments: tuple[tuple[int, ...], ...] = ()
    free: tuple[int, ...] = ()
    alpha: int = -1
    chase: TrainChaseState | None = None


class ClawNetStrategy(CopStrategy):
    def __init__(self, G: Graph, n: int, start: int = 0, check: bool = True):
        if n < 1:
            raise GraphError("segment length n must be >= 1")
        super().__init__(G)
        if check:
            require_member(G, [gen_claw(n, n, n), gen_net(n, n, n)], f"{{H_a({n}), H_c({n})}}-free graphs")
        self.n = n
        self.cop_count = 4 * n
        self.start = start

    def initial(self) -> ClawNetState:
        return ClawNetState((self.start,) * self.cop_count, "start")

    def respond(self, state: ClawNetState, robber: int) -> ClawNetState:
        hit = self.capture_move(state.positions, robber)
        if hit is not None:
            return state._replace(positions=hit, mode=DONE)
        try:
            if state.mode == "start":
                cs = chase_start(frozenset(range(self.graph.n)), self.start)
                return self._opening_chase(state._replace(chase=cs), robber)
            if state.mode == "chase0":
                return self._opening_chase(state, robber)
            if state.mode == "travel":
                return self._travel(state, robber)
            if state.mode == "extend":
                return self._extend(state, robber)
        except GraphError as exc:
            raise StrategyError(str(exc)) from exc
        raise StrategyError(f"unknown mode {state.mode!r}")

    # -- phases --------------------------------------------------------------

    def _opening_chase(self, state: ClawNetState, robber: int) -> ClawNetState:
        K = self.cop_count
        cs = chase_advance(self.graph, state.chase, robber)
        positions = train_positions(cs, K)
        if cs.step < K:
            return ClawNetState(positions, "chase0", chase=cs)
        n = self.n
        segments = tuple(tuple(range(s * n, (s + 1) * n)) for s in range(4))
        return self._begin_phase(positions, cs.anchors[:K], segments, cs.anchors[K], robber)

    def _territory(self, path: tuple[int, ...], robber: int) -> frozenset[int]:
        blocked = closed_neighborhood(self.graph, path)
        if robber in blocked:
            raise StrategyError(f"robber at {robber} is next to the path but was not caught")
        allowed = frozenset(range(self.graph.n)) - blocked
        return frozenset(bfs_distances(self.graph, robber, allowed))

    def _begin_phase(self, positions, path, segments, alpha, robber) -> ClawNetState:
        G, n = self.graph, self.n
        j = len(segments)
        territory = self._territory(path, robber)
        seg_vertices = [path[s * n : (s + 1) * n] for s in range(j)]
        covered = open_neighborhood(G, seg_vertices[0] + seg_vertices[j - 2] + seg_vertices[j - 1])
        for s in range(1, j - 2):
            reach = open_neighborhood(G, seg_vertices[s])
            for w in territory:
                loose = (G.adj[w] & reach) - covered
                if loose:
                    raise StrategyError(
                        f"territory vertex {w} reaches segment {s + 1} through {sorted(loose)} "
                        "outside the occupied segments' neighbourhoods"
                    )
        if alpha not in G.adj[path[-1]] or alpha in closed_neighborhood(G, path[:-1]):
            raise StrategyError(f"gateway {alpha} is not a private neighbour of the path end")
        if not G.adj[alpha] & territory:
            raise StrategyError(f"gateway {alpha} does not touch the robber's territory")
        freed = segments[j - 3]
        segments = segments[: j - 3] + ((),) + segments[j - 2 :]
        state = ClawNetState(positions, "travel", path, segments, freed, alpha)
        return self._travel(state, robber)

    def _hop(self, state: ClawNetState, v: int) -> int:
        if v == state.alpha:
            return v
        i = state.path.index(v)
        return state.path[i + 1] if i + 1 < len(state.path) else state.alpha

    def _travel(self, state: ClawNetState, robber: int) -> ClawNetState:
        pos = list(state.positions)
        if all(pos[c] == state.alpha for c in state.free):
            territory = self._territory(state.path, robber)
            cs = chase_start(territory | {state.alpha}, state.alpha)
            return self._extend(state._replace(mode="extend", chase=cs), robber)
        for c in state.free:
            pos[c] = self._hop(state, pos[c])
        return state._replace(positions=tuple(pos))

    def _extend(self, state: ClawNetState, robber: int) -> ClawNetState:
        n = self.n
        cs = chase_advance(self.graph, state.chase, robber)
        pos = list(state.positions)
        for c, v in zip(state.free, train_positions(cs, n)):
            pos[c] = v
        if cs.step < n:
            return state._replace(positions=tuple(pos), chase=cs)
        path = state.path + cs.anchors[:n]
        segments = state.segments + (state.free,)
        return self._begin_phase(tuple(pos), path, segments, cs.anchors[n], robber)


def strategy_gen_claw_net(G: Graph, n: int) -> ClawNetStrategy:
    return ClawNetStrategy(G, n)
