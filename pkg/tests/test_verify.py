import pytest

from copsrobbers.generators import cycle, path
from copsrobbers.strategies import (
    CopStrategy,
    Outcome,
    StationaryCops,
    StrategyError,
    adversarial_verify,
    strategy_cl1,
    strategy_pk_free,
)


class Teleport(CopStrategy):
    cop_count = 1

    def initial(self):
        return ((0,),)

    def respond(self, state, robber):
        return ((self.graph.n - 1 - state[0][0],),)


class Chaser(CopStrategy):
    """Walks towards the robber along the path 0..n-1."""

    cop_count = 1

    def initial(self):
        return ((0,),)

    def respond(self, state, robber):
        c = state[0][0]
        return ((c + (robber > c) - (robber < c),),)


def test_captured_on_cycle():
    v = adversarial_verify(cycle(6), strategy_cl1(cycle(6)), 50)
    assert v.outcome is Outcome.CAPTURED and v.max_steps <= 6
    assert v.states_explored > 0
    assert v.as_dict()["outcome"] == "captured"


def test_stationary_cop_loses():
    v = adversarial_verify(cycle(6), StationaryCops(cycle(6), (0,)), 50)
    assert v.outcome is Outcome.ROBBER_SURVIVES
    assert v.witness and all(r not in (0, 1, 5) for r in v.witness)


def test_stationary_cop_wins_on_star_centre():
    from copsrobbers.generators import star

    v = adversarial_verify(star(4), StationaryCops(star(4), (0,)), 5)
    assert v.captured and v.max_steps == 1


def test_pk_free_on_path():
    v = adversarial_verify(path(4), strategy_pk_free(path(4), 5), 10)
    assert v.captured and v.max_steps <= 4


def test_budget_exceeded():
    v = adversarial_verify(path(12), Chaser(path(12)), 3)
    assert v.outcome is Outcome.BUDGET_EXCEEDED
    assert adversarial_verify(path(12), Chaser(path(12)), 20).captured


def test_illegal_move_is_a_strategy_failure():
    with pytest.raises(StrategyError):
        adversarial_verify(path(5), Teleport(path(5)), 10)


def test_budget_validation():
    with pytest.raises(ValueError):
        adversarial_verify(path(3), Chaser(path(3)), 0)
