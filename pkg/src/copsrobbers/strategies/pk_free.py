"""Train-chasing with ``k - 2`` cops on ``P_k``-free graphs.

By the time the train occupies ``v_1 .. v_{k-2}`` the robber, confined to
the territory, is adjacent to one of the anchors. Otherwise the anchors
and the next two geodesic vertices would induce a ``P_k``.
"""

from __future__ import annotations

from typing import NamedTuple

from ..graph import Graph, GraphError
from ..patterns import path_pattern
from .base import DONE, CopStrategy, StrategyError, require_member
from .chase import TrainChaseState, chase_advance, chase_start, train_positions


class TrainState(NamedTuple):
    positions: tuple[int, ...]
    mode: str
    chase: TrainChaseState


class PkFreeTrain(CopStrategy):
    def __init__(self, G: Graph, k: int, start: int = 0, check: bool = True):
        if k < 3:
            raise GraphError("P_k-free strategy needs k >= 3")
        super().__init__(G)
        if check:
            require_member(G, [path_pattern(k)], f"P_{k}-free graphs")
        self.k = k
        self.cop_count = k - 2
        self.start = start

    def initial(self) -> TrainState:
        cs = chase_start(frozenset(range(self.graph.n)), self.start)
        return TrainState((self.start,) * self.cop_count, "chase", cs)

    def respond(self, state: TrainState, robber: int) -> TrainState:
        hit = self.capture_move(state.positions, robber)
        if hit is not None:
            return TrainState(hit, DONE, state.chase)
        if state.chase.step >= self.cop_count - 1:
            raise StrategyError(
                f"robber at {robber} not dominated by the anchor path {state.chase.anchors}"
            )
        try:
            cs = chase_advance(self.graph, state.chase, robber)
        except GraphError as exc:
            raise StrategyError(str(exc)) from exc
        return TrainState(train_positions(cs, self.cop_count), "chase", cs)


def strategy_pk_free(G: Graph, k: int) -> PkFreeTrain:
    return PkFreeTrain(G, k)
