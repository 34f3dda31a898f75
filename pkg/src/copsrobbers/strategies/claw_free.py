"""Layer-sweeping strategies for three subclasses of claw-free graphs.

All three park every cop on ``u0 = 0``. Once the robber shows itself at
``r``, ``u1`` is the second vertex of the least ``(u0, r)``-geodesic and the
layers come from :func:`layered_decomposition`. Cop 0 never leaves ``u0``,
which confines the robber to ``H'``. The remaining cops sweep the layers
outward:

* two cops (claw, bull free): one cop walks one layer per turn; a cop in
  layer ``i`` sees layers ``i-1 .. i+1`` because adjacent layers are
  complete to each other.
* three cops (claw, net, antenna free): two cops walk the path
  ``x_0 = u0, x_1 = u1, ...`` where ``x_j`` is the least vertex of layer
  ``j`` dominating layer ``j+1``, one step apart.
* five cops (claw, net free): two pairs hold ``A_{i-1}`` and ``A_i``, where
  ``A_j`` is the least maximal independent set of layer ``j`` (at most two
  vertices, dominating the layer). The rear pair walks, one cop at a time,
  to ``A_{i+1}`` inside ``H'`` while the front pair stays, then the roles
  swap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from ..graph import Graph, geodesic
from ..patterns import CL1, CL2, CL3, family
from .base import DONE, CopStrategy, StrategyError, require_member
from .layers import LayeredDecomposition, dominator, greedy_independent_dominator, layered_decomposition


class SweepState(NamedTuple):
    positions: tuple[int, ...]
    mode: str
    u1: int = -1
    layer: int = 0
    rear: int = 0


class _LayerSweep(CopStrategy):
    label = ""
    forbidden: tuple[str, ...] = ()
    u0 = 0

    def __init__(self, G: Graph, check: bool = True):
        super().__init__(G)
        if check:
            require_member(G, family(*self.forbidden), self.label)
        self._decomp = lru_cache(maxsize=None)(self._build)

    def _build(self, u1: int) -> LayeredDecomposition:
        return layered_decomposition(self.graph, self.u0, u1)

    def initial(self) -> SweepState:
        return SweepState((self.u0,) * self.cop_count, "start")

    def respond(self, state: SweepState, robber: int) -> SweepState:
        hit = self.capture_move(state.positions, robber)
        if hit is not None:
            return SweepState(hit, DONE, state.u1, state.layer, state.rear)
        if state.mode == "start":
            u1 = geodesic(self.graph, self.u0, robber)[1]
            return self.opening(self._decomp(u1), robber)
        L = self._decomp(state.u1)
        layer = L.layer_of(robber)
        if layer is None:
            raise StrategyError(f"robber at {robber} escaped H'")
        return self.advance(L, state, robber, layer)

    def opening(self, L: LayeredDecomposition, robber: int) -> SweepState:
        raise NotImplementedError

    def advance(self, L: LayeredDecomposition, state: SweepState, robber: int, layer: int) -> SweepState:
        raise NotImplementedError


class TwoCopSweep(_LayerSweep):
    label = "claw- and bull-free graphs"
    forbidden = CL1
    cop_count = 2

    def opening(self, L, robber):
        return SweepState((self.u0, L.u1), "march", L.u1, 1)

    def advance(self, L, state, robber, layer):
        i = state.layer
        if layer < i + 2:
            raise StrategyError(f"robber in layer {layer} slipped past the cop in layer {i}")
        here = state.positions[1]
        step = [v for v in L.layers[i + 1] if v in self.graph.adj[here]]
        if not step:
            raise StrategyError(f"layer {i + 1} is not complete to layer {i}")
        return SweepState((self.u0, step[0]), "march", state.u1, i + 1)


class ThreeCopSweep(_LayerSweep):
    label = "claw-, net- and antenna-free graphs"
    forbidden = CL2
    cop_count = 3

    def __init__(self, G: Graph, check: bool = True):
        super().__init__(G, check)
        self._spine = lru_cache(maxsize=None)(self._build_spine)

    def _build_spine(self, u1: int) -> tuple[int, ...]:
        L = self._decomp(u1)
        spine = [L.u0, L.u1]
        for j in range(1, len(L.layers) - 1):
            x = dominator(self.graph, L.layers[j], L.layers[j + 1])
            if x is None:
                raise StrategyError(f"no vertex of layer {j} dominates layer {j + 1}")
            if j > 1:
                spine.append(x)
        return tuple(spine)

    def opening(self, L, robber):
        return SweepState((self.u0, self.u0, L.u1), "walk", L.u1, 1)

    def advance(self, L, state, robber, layer):
        i = state.layer
        spine = self._spine(state.u1)
        if layer < i + 2:
            raise StrategyError(f"robber in layer {layer} slipped past the cops at layer {i}")
        if i + 1 >= len(spine):
            raise StrategyError("ran out of layers without a capture")
        return SweepState((self.u0, spine[i], spine[i + 1]), "walk", state.u1, i + 1)


class FiveCopSweep(_LayerSweep):
    label = "claw- and net-free graphs"
    forbidden = CL3
    cop_count = 5

    def __init__(self, G: Graph, check: bool = True):
        super().__init__(G, check)
        self._anchors = lru_cache(maxsize=None)(self._build_anchors)

    def _build_anchors(self, u1: int) -> tuple[tuple[int, ...], ...]:
        L = self._decomp(u1)
        sets = tuple(greedy_independent_dominator(self.graph, layer) for layer in L.layers)
        for j, A in enumerate(sets):
            if len(A) > 2:
                raise StrategyError(f"layer {j} has three independent vertices")
        return sets

    @staticmethod
    def _pair(rear: int) -> tuple[int, int]:
        return (1, 2) if rear == 0 else (3, 4)

    def opening(self, L, robber):
        u0, u1 = self.u0, L.u1
        return SweepState((u0, u0, u0, u1, u1), "relocate", u1, 1, 0)

    def advance(self, L, state, robber, layer):
        A = self._anchors(state.u1)
        i, rear = state.layer, state.rear
        if layer < i + 1:
            raise StrategyError(f"robber in layer {layer} got behind the front pair in layer {i}")
        pos = list(state.positions)
        if i + 1 >= len(A):
            raise StrategyError("ran out of layers without a capture")
        targets = (A[i + 1][0], A[i + 1][-1])
        for cop, target in zip(self._pair(rear), targets):
            if pos[cop] != target:
                pos[cop] = geodesic(self.graph, pos[cop], target, L.hprime)[1]
                break
        if all(pos[c] == t for c, t in zip(self._pair(rear), targets)):
            i, rear = i + 1, 1 - rear
        return SweepState(tuple(pos), "relocate", state.u1, i, rear)


def strategy_cl1(G: Graph) -> TwoCopSweep:
    return TwoCopSweep(G)


def strategy_cl2(G: Graph) -> ThreeCopSweep:
    return ThreeCopSweep(G)


def strategy_cl3(G: Graph) -> FiveCopSweep:
    return FiveCopSweep(G)
