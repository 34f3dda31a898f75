"""Exact k-cop solving by retrograde analysis.

States are ``(cops, robber, mover)`` with ``cops`` a sorted tuple (cops may
share vertices). On a cop turn every cop moves within its closed
neighbourhood simultaneously; on a robber turn the robber does the same. The
robber is caught when it shares a vertex with a cop after either half-turn.

The labelling is computed layer by layer: layer ``t`` holds the cop-to-move
states from which the cops force capture in exactly ``t`` cop turns. Each
layer is one sparse product of the cop-move relation with the current
robber-to-move win table. States never reached are robber wins.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations_with_replacement, product

import numpy as np
from scipy import sparse

from .graph import INF, Graph, GraphError, is_connected

DEFAULT_STATE_BUDGET = 50_000_000


class Mover(Enum):
    COPS = "cops"
    ROBBER = "robber"


class BudgetExceeded(RuntimeError):
    """The instance has more states than the configured budget."""


class OracleCapExceeded(RuntimeError):
    """The naive oracle hit its iteration cap without converging."""


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]
    robber: int
    mover: Mover

    def __post_init__(self) -> None:
        if tuple(sorted(self.cops)) != self.cops:
            raise GraphError("cop positions must be sorted ascending")

    @property
    def captured(self) -> bool:
        return self.robber in self.cops


def state_count(n: int, k: int) -> int:
    """Number of states (both movers) for ``k`` cops on ``n`` vertices."""
    return 2 * n * math.comb(n + k - 1, k)


class SolveResult:
    """Win/depth labelling of every state for a fixed cop count.

    ``depth`` is the number of cop turns still needed under optimal play
    (0 for captured states); ``None`` marks a robber win.
    """

    def __init__(self, G: Graph, k: int, configs: list[tuple[int, ...]], cop_depth: np.ndarray, robber_depth: np.ndarray):
        self.graph = G
        self.k = k
        self.configs = configs
        self.index = {c: i for i, c in enumerate(configs)}
        self.cop_depth = cop_depth
        self.robber_depth = robber_depth

    def _row(self, state: GameState) -> np.ndarray:
        if len(state.cops) != self.k:
            raise GraphError(f"state has {len(state.cops)} cops, labelling is for {self.k}")
        self.graph.check_vertex(state.robber)
        table = self.cop_depth if state.mover is Mover.COPS else self.robber_depth
        return table[self.index[state.cops]]

    def depth(self, state: GameState) -> int | None:
        d = int(self._row(state)[state.robber])
        return None if d < 0 else d

    def win(self, state: GameState) -> bool:
        return self.depth(state) is not None

    @cached_property
    def placement_values(self) -> np.ndarray:
        """Worst-case capture time per initial placement (-1: robber escapes)."""
        d = self.cop_depth
        worst = d.max(axis=1)
        worst[(d < 0).any(axis=1)] = -1
        return worst

    @property
    def cop_win(self) -> bool:
        return bool((self.placement_values >= 0).any())

    @property
    def best_initial(self) -> tuple[int, ...] | None:
        vals = self.placement_values
        ok = np.flatnonzero(vals >= 0)
        if ok.size == 0:
            return None
        return self.configs[int(ok[np.argmin(vals[ok])])]

    @property
    def capture_time(self) -> float:
        best = self.best_initial
        if best is None:
            return INF
        return int(self.placement_values[self.index[best]])


def _configs(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(n), k))


def _cop_moves(G: Graph, configs: list[tuple[int, ...]], index: dict[tuple[int, ...], int]) -> sparse.csr_matrix:
    closed = [sorted(G.closed_neighborhood(v)) for v in range(G.n)]
    rows: list[int] = []
    cols: list[int] = []
    for i, c in enumerate(configs):
        succ = {index[tuple(sorted(m))] for m in product(*(closed[v] for v in c))}
        rows.extend([i] * len(succ))
        cols.extend(succ)
    data = np.ones(len(rows), dtype=np.int32)
    return sparse.csr_matrix((data, (rows, cols)), shape=(len(configs), len(configs)))


def solve(G: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> SolveResult:
    """Label every state of the ``k``-cop game on connected ``G``."""
    if k < 1:
        raise GraphError("need at least one cop")
    if not is_connected(G):
        raise GraphError("the game is solved on connected graphs only")
    total = state_count(G.n, k)
    if total > budget:
        raise BudgetExceeded(f"{total} states exceed the budget of {budget}")
    n = G.n
    configs = _configs(n, k)
    index = {c: i for i, c in enumerate(configs)}
    moves = _cop_moves(G, configs, index)

    capture = np.zeros((len(configs), n), dtype=bool)
    for i, c in enumerate(configs):
        capture[i, list(c)] = True
    closed = np.eye(n, dtype=np.int32)
    for u, v in G.edges():
        closed[u, v] = closed[v, u] = 1
    closed_deg = closed.sum(axis=0)

    cop_depth = np.full((len(configs), n), -1, dtype=np.int32)
    cop_depth[capture] = 0
    cop_won = capture.copy()
    t = 0
    while True:
        robber_won = capture | ((cop_won.astype(np.int32) @ closed) == closed_deg)
        t += 1
        reach = (moves @ robber_won.astype(np.int32)) > 0
        new = reach & ~cop_won
        if not new.any():
            break
        cop_depth[new] = t
        cop_won |= new

    robber_depth = np.full_like(cop_depth, -1)
    for r in range(n):
        nbrs = list(G.closed_neighborhood(r))
        sub = cop_depth[:, nbrs]
        ok = (sub >= 0).all(axis=1)
        robber_depth[ok, r] = sub[ok].max(axis=1)
    robber_depth[capture] = 0
    return SolveResult(G, k, configs, cop_depth, robber_depth)


def cop_number(G: Graph, k_max: int | None = None, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Least ``k`` for which ``k`` cops win on connected ``G``."""
    k_max = G.n if k_max is None else k_max
    for k in range(1, k_max + 1):
        if solve(G, k, budget).cop_win:
            return k
    raise BudgetExceeded(f"no winning cop count up to k_max={k_max}")


def capture_time(G: Graph, k: int, budget: int = DEFAULT_STATE_BUDGET) -> float:
    """Optimal worst-case number of cop turns, ``math.inf`` if the robber wins."""
    return solve(G, k, budget).capture_time


def optimal_robber_reply(R: SolveResult, s: GameState) -> int:
    """Best robber move: stay uncaught if possible, else delay capture.

    Ties go to the smallest vertex.
    """
    if s.mover is not Mover.ROBBER:
        raise GraphError("optimal_robber_reply needs a robber-to-move state")
    if s.captured:
        raise GraphError("the robber is already captured")
    row = R.cop_depth[R.index[s.cops]]
    best_key = None
    best = s.robber
    for v in sorted(R.graph.closed_neighborhood(s.robber)):
        d = int(row[v])
        key = (1, 0) if d < 0 else (0, d)
        if best_key is None or key > best_key:
            best_key, best = key, v
    return best


def naive_oracle(G: Graph, k: int, depth_cap: int | None = None) -> bool:
    """Independent cop-win check by fixed-point iteration over ordered tuples.

    Cop positions are kept as ordered ``k``-tuples (no symmetry reduction)
    and the cop-win set grows one cop turn per round until it is stable.
    ``depth_cap`` defaults to twice the number of states; hitting it raises.
    """
    if not is_connected(G):
        raise GraphError("the game is solved on connected graphs only")
    n = G.n
    closed = [tuple(sorted(G.closed_neighborhood(v))) for v in range(n)]
    cop_tuples = list(product(range(n), repeat=k))
    states = [(c, r) for c in cop_tuples for r in range(n)]
    if depth_cap is None:
        depth_cap = 2 * len(states)
    moves = {c: list(product(*(closed[v] for v in c))) for c in cop_tuples}
    won = {(c, r) for c, r in states if r in c}
    for _ in range(depth_cap):
        grown = set(won)
        for c, r in states:
            if (c, r) in grown:
                continue
            for c2 in moves[c]:
                if r in c2 or all((c2, r2) in won for r2 in closed[r]):
                    grown.add((c, r))
                    break
        if grown == won:
            return any(all((c, r) in won for r in range(n)) for c in cop_tuples)
        won = grown
    raise OracleCapExceeded(f"no fixed point after {depth_cap} rounds")
