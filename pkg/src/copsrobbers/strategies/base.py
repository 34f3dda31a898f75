"""Common harness for deterministic cop strategies."""

from __future__ import annotations

from collections.abc import Hashable

from ..graph import Graph, is_connected
from ..patterns import Family, find_induced


class StrategyError(RuntimeError):
    """A strategy broke one of its own structural guarantees."""


class MembershipError(ValueError):
    """The host graph is outside the class a strategy is written for."""


class CopStrategy:
    """Deterministic cop strategy driven one cop turn at a time.

    Subclasses keep all per-game memory in immutable, hashable state values
    whose first field is the tuple of cop positions. ``respond`` maps
    ``(state, robber)`` to the next state; ``encode`` returns the canonical
    key the verifier uses to detect repeated positions.
    """

    cop_count: int

    def __init__(self, G: Graph):
        self.graph = G

    def initial(self) -> tuple:
        raise NotImplementedError

    def respond(self, state: tuple, robber: int) -> tuple:
        raise NotImplementedError

    @staticmethod
    def positions(state: tuple) -> tuple[int, ...]:
        return state[0]

    def encode(self, state: tuple) -> Hashable:
        return state

    @property
    def placement(self) -> tuple[int, ...]:
        return self.positions(self.initial())

    def capture_move(self, cops: tuple[int, ...], robber: int) -> tuple[int, ...] | None:
        """Send the first cop that can reach the robber onto it."""
        for i, c in enumerate(cops):
            if c == robber or robber in self.graph.adj[c]:
                return cops[:i] + (robber,) + cops[i + 1 :]
        return None


def require_member(G: Graph, F: Family, label: str) -> None:
    if not is_connected(G):
        raise MembershipError(f"{label} needs a connected graph")
    for H in F:
        w = find_induced(G, H)
        if w is not None:
            raise MembershipError(f"graph contains an induced {H} at {w}; not in {label}")


DONE = "done"
