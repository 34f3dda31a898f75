"""Exhaustive verification of a deterministic cop strategy.

Because the cops are deterministic, the game reduces to a one-player search
over nodes ``(encoded strategy state, robber vertex)`` at the cops' turn.
A node's value is the number of cop turns until capture against the worst
robber. A node repeated on the current line of play means the robber can
loop forever.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from enum import Enum

from ..graph import Graph
from .base import CopStrategy, StrategyError


class Outcome(Enum):
    CAPTURED = "captured"
    ROBBER_SURVIVES = "robber_survives"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass
class Verdict:
    outcome: Outcome
    max_steps: int | None = None
    witness: list[int] = field(default_factory=list)
    states_explored: int = 0

    @property
    def captured(self) -> bool:
        return self.outcome is Outcome.CAPTURED

    def as_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "max_steps": self.max_steps,
            "witness": self.witness,
            "states_explored": self.states_explored,
        }


class _Stop(Exception):
    def __init__(self, verdict: Verdict):
        self.verdict = verdict


def adversarial_verify(G: Graph, S: CopStrategy, step_budget: int = 200) -> Verdict:
    """Play ``S`` against every robber; see :class:`Verdict` for outcomes.

    ``step_budget`` caps the number of cop turns on any line of play.
    Illegal cop moves raise :class:`StrategyError`.
    """
    if step_budget < 1:
        raise ValueError("step_budget must be >= 1")
    done: dict[tuple, int] = {}
    on_line: dict[tuple, int] = {}
    line: list[int] = []
    closed = [tuple(sorted(G.closed_neighborhood(v))) for v in range(G.n)]

    def value(state, robber: int, depth: int) -> int:
        key = (S.encode(state), robber)
        if key in done:
            return done[key]
        if key in on_line:
            cycle = line[on_line[key] :] + [robber]
            raise _Stop(Verdict(Outcome.ROBBER_SURVIVES, witness=cycle, states_explored=len(done)))
        if depth > step_budget:
            raise _Stop(Verdict(Outcome.BUDGET_EXCEEDED, witness=line + [robber], states_explored=len(done)))
        before = S.positions(state)
        nxt = S.respond(state, robber)
        after = S.positions(nxt)
        if len(after) != len(before):
            raise StrategyError(f"strategy changed the cop count from {len(before)} to {len(after)}")
        for a, b in zip(before, after):
            if b != a and b not in G.adj[a]:
                raise StrategyError(f"illegal cop move {a} -> {b}")
        if robber in after:
            done[key] = 1
            return 1
        on_line[key] = len(line)
        line.append(robber)
        worst = 0
        for r2 in closed[robber]:
            worst = max(worst, 1 if r2 in after else value(nxt, r2, depth + 1))
        line.pop()
        del on_line[key]
        done[key] = 1 + worst
        return 1 + worst

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * step_budget + 1000))
    try:
        start = S.initial()
        placed = S.positions(start)
        worst = 0
        for r in range(G.n):
            worst = max(worst, 0 if r in placed else value(start, r, 1))
    except _Stop as stop:
        return stop.verdict
    finally:
        sys.setrecursionlimit(old_limit)
    return Verdict(Outcome.CAPTURED, worst, states_explored=len(done))


class StationaryCops(CopStrategy):
    """Cops that never move; a baseline for the verifier."""

    def __init__(self, G: Graph, where: tuple[int, ...]):
        super().__init__(G)
        self.cop_count = len(where)
        self.where = tuple(where)

    def initial(self):
        return (self.where,)

    def respond(self, state, robber):
        hit = self.capture_move(state[0], robber)
        return (hit,) if hit is not None else state
