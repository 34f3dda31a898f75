import pytest

from copsrobbers.generators import (
    circulant,
    complete_bipartite,
    complete_multipartite,
    generate,
    gnp,
    petersen,
    random_connected,
    spider,
    splitmix64,
    star,
)
from copsrobbers.graph import GraphError, is_connected


def test_splitmix_reference_values():
    # first outputs for seed 0 of the reference splitmix64
    it = splitmix64(0)
    assert next(it) == 0xE220A8397B1DCDAF
    assert next(it) == 0x6E789E6AA1B965F4


def test_gnp_is_deterministic():
    assert gnp(12, 0.3, 42) == gnp(12, 0.3, 42)
    assert gnp(12, 0.3, 42) != gnp(12, 0.3, 43)
    assert gnp(12, 0.3, 42) == generate("gnp:12,0.3,42")


def test_gnp_extremes():
    assert gnp(6, 0.0, 1).m == 0
    assert gnp(6, 1.0, 1).m == 15


def test_named_families():
    assert star(3) == complete_bipartite(1, 3)
    P = petersen()
    assert (P.n, P.m) == (10, 15) and set(P.degrees()) == {3}
    S = spider(2, 2, 1)
    assert S.n == 6 and sorted(S.degrees()) == [1, 1, 1, 2, 2, 3]
    assert complete_multipartite(2, 2, 2).m == 12
    assert circulant(6, 1) == generate("cycle:6")


def test_random_connected_is_connected():
    for seed in range(20):
        assert is_connected(random_connected(15, 0.15, seed))


@pytest.mark.parametrize("spec", ["nope:3", "cycle", "cycle:x", "gnp:5,0.5", "path:0"])
def test_bad_specs(spec):
    with pytest.raises(GraphError):
        generate(spec)
