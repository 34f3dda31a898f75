import random

import pytest

from copsrobbers.generators import complete, cycle, path, petersen, random_connected, star
from copsrobbers.graph import GraphError
from copsrobbers.strategies import (
    chase_advance,
    chase_start,
    check_chase_invariants,
    theta,
    train_chase,
    train_positions,
)


def test_theta_examples():
    assert theta(0, 4, path(5)) == 1
    assert theta(0, 2, cycle(4)) == 1
    with pytest.raises(GraphError):
        theta(0, 1, cycle(4))
    # restricted to a territory the geodesic may change
    assert theta(0, 2, cycle(4), frozenset({0, 3, 2})) == 3


def test_theta_disconnected_territory():
    with pytest.raises(GraphError):
        theta(0, 3, path(4), frozenset({0, 3}))


def flee_right(G):
    def move(cops, r):
        return min(r + 1, G.n - 1)

    return move


def test_path_chase():
    G = path(10)
    out = train_chase(G, 3, flee_right(G), robber_start=9)
    assert not out.captured
    assert out.state.anchors == (0, 1, 2, 3)
    assert out.state.territory == frozenset(range(2, 10))
    assert out.cops == (0, 1, 2)
    assert out.violations == []


def test_capture_when_adjacent_at_start():
    out = train_chase(path(5), 2, flee_right(path(5)), robber_start=1)
    assert out.captured and out.turns == 1


def test_star_capture():
    G = star(5)
    for r in range(1, 6):
        out = train_chase(G, 1, lambda cops, v: v, robber_start=r)
        assert out.captured and out.turns <= 2
    # from a leaf the single cop holds its anchor, so the robber stays free
    out = train_chase(G, 1, lambda cops, v: v, start=1, robber_start=2)
    assert not out.captured and out.cops == (1,) and out.state.anchors == (1, 0)


def test_train_positions():
    cs = chase_start(frozenset(range(6)), 0)
    assert train_positions(cs, 3) == (0, 0, 0)
    cs = chase_advance(path(6), cs, 5)
    assert train_positions(cs, 3) == (0, 1, 1)
    cs = chase_advance(path(6), cs, 5)
    assert train_positions(cs, 3) == (0, 1, 2)
    cs = chase_advance(path(6), cs, 5)
    assert train_positions(cs, 3) == (0, 1, 2)


def test_chase_state_bookkeeping():
    G = cycle(8)
    cs = chase_advance(G, chase_start(frozenset(range(8)), 0), 4)
    assert cs.anchors == (0, 1) and cs.cuts == ((7,),)
    assert cs.territory == frozenset(range(7))
    assert check_chase_invariants(G, cs, robber=4) == []
    with pytest.raises(GraphError):
        chase_advance(G, cs, 7)
    with pytest.raises(GraphError):
        chase_start(frozenset({1, 2}), 0)


def test_invariant_checker_detects_problems():
    G = cycle(6)
    cs = chase_advance(G, chase_start(frozenset(range(6)), 0), 3)
    assert check_chase_invariants(G, cs, robber=5)
    assert check_chase_invariants(G, cs, cops=(4,))
    from copsrobbers.strategies import TrainChaseState

    bogus = TrainChaseState((0, 1), ((),), frozenset({1, 2, 3}))
    assert any("leaves the territory" in p for p in check_chase_invariants(G, bogus))


def test_illegal_robber_move():
    with pytest.raises(GraphError):
        train_chase(path(6), 1, lambda cops, r: 0, robber_start=5)


@pytest.mark.parametrize("seed", range(40))
def test_invariants_against_random_robbers(seed):
    rng = random.Random(seed)
    G = random_connected(12 + seed % 15, 0.2, seed)
    k = 1 + seed % 5
    out = train_chase(
        G,
        k,
        lambda cops, r: rng.choice(sorted(G.closed_neighborhood(r))),
        place_robber=lambda cops: rng.randrange(G.n),
    )
    assert out.violations == []
    assert all(len(h.anchors) == i + 1 for i, h in enumerate(out.history))


def test_dense_graphs_capture_fast():
    for G in (complete(6), petersen()):
        out = train_chase(G, 3, lambda cops, r: r, robber_start=G.n - 1)
        assert out.violations == []
