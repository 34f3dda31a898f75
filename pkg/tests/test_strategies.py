import pytest

from copsrobbers.enumerate import enumerate_hereditary
from copsrobbers.generators import complete, complete_multipartite, cycle, path, petersen, star
from copsrobbers.patterns import CL1, CL2, CL3, family, is_family_free
from copsrobbers.solver import solve
from copsrobbers.strategies import (
    MembershipError,
    adversarial_verify,
    strategy_cl1,
    strategy_cl2,
    strategy_cl3,
    strategy_gen_claw_net,
    strategy_pk_free,
)
from copsrobbers.strategies.claw_net import ClawNetStrategy
from copsrobbers.strategies.pk_free import PkFreeTrain


def captured_within(G, S, bound, budget=200):
    v = adversarial_verify(G, S, budget)
    assert v.captured, v
    assert v.max_steps <= bound, v
    return v


def test_cl1_examples():
    captured_within(cycle(6), strategy_cl1(cycle(6)), 6)
    for n in range(1, 7):
        captured_within(complete(n), strategy_cl1(complete(n)), 2)
    assert strategy_cl1(cycle(6)).cop_count == 2


def test_cl2_and_cl3_examples():
    for m in range(3, 10):
        captured_within(cycle(m), strategy_cl2(cycle(m)), 2 * m)
        captured_within(cycle(m), strategy_cl3(cycle(m)), 4 * m)
    assert strategy_cl2(cycle(5)).cop_count == 3
    assert strategy_cl3(cycle(5)).cop_count == 5


def test_membership_checked():
    with pytest.raises(MembershipError):
        strategy_cl1(star(3))
    with pytest.raises(MembershipError):
        strategy_cl3(petersen())
    with pytest.raises(MembershipError):
        strategy_pk_free(path(5), 5)
    with pytest.raises(MembershipError):
        strategy_gen_claw_net(star(3), 1)


def test_pk_free_examples():
    K = complete_multipartite(2, 2, 2)
    captured_within(K, strategy_pk_free(K, 4), 3)
    captured_within(complete(4), strategy_pk_free(complete(4), 3), 1)
    S = strategy_pk_free(cycle(4), 5)
    assert S.cop_count == 3
    captured_within(cycle(4), S, 4)
    captured_within(path(4), strategy_pk_free(path(4), 5), 4, budget=10)


def test_pk_free_other_start():
    G = cycle(5)
    for start in range(5):
        captured_within(G, PkFreeTrain(G, 6, start=start), 5)


def test_claw_net_on_cycles():
    for m in range(3, 13):
        S = strategy_gen_claw_net(cycle(m), 1)
        assert S.cop_count == 4
        assert adversarial_verify(cycle(m), S, 400).captured


def test_claw_net_larger_n():
    for m in (6, 9, 14):
        assert adversarial_verify(cycle(m), strategy_gen_claw_net(cycle(m), 2), 400).captured
    G = path(9)
    assert adversarial_verify(G, ClawNetStrategy(G, 2, start=4), 400).captured


def test_deterministic_responses():
    G = cycle(7)
    S = strategy_cl3(G)
    s0 = S.initial()
    assert S.respond(s0, 3) == S.respond(s0, 3)
    assert S.encode(S.respond(s0, 3)) == S.encode(S.respond(s0, 3))


@pytest.mark.parametrize(
    "names,make,k",
    [(CL1, strategy_cl1, 2), (CL2, strategy_cl2, 3), (CL3, strategy_cl3, 5)],
)
def test_strategy_success_implies_cop_win(names, make, k):
    F = family(*names)
    for n in range(1, 7):
        for G in enumerate_hereditary(n, lambda H: is_family_free(H, F)):
            v = adversarial_verify(G, make(G), 400)
            assert v.captured, G.edges()
            assert solve(G, k).cop_win
