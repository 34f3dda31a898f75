import pytest

from copsrobbers.campaigns import (
    PREDICT_FIXTURES,
    corpus,
    evaluate_predict_case,
    parse_theorem,
    run_campaign,
)
from copsrobbers.enumerate import canonical_code


def test_parse_theorem():
    assert parse_theorem("pkfree:5") == ("pkfree", "5")
    assert parse_theorem("layers:d") == ("layers", "d")
    assert parse_theorem("cl1") == ("cl1", None)
    for bad in ["pkfree", "pkfree:2", "clawnet:0", "layers:e", "cl1:3", "nope"]:
        with pytest.raises(ValueError):
            parse_theorem(bad)


def test_corpus_sizes():
    assert len(corpus("", 5)) == 1 + 1 + 2 + 6 + 21
    assert len(corpus("p4", 4)) == 1 + 1 + 2 + 5


@pytest.mark.parametrize(
    "theorem", ["cl1", "cl2", "cl3", "pkfree:4", "pkfree:5", "clawnet:1", "monotone", "layers:a", "layers:d"]
)
def test_small_campaigns_pass(theorem):
    out = run_campaign(theorem, 5)
    assert out["instances"] > 0
    assert out["failed"] == 0, out["counterexamples"]


def test_results_sorted_and_job_independent():
    one = run_campaign("cl2", 6, jobs=1)
    two = run_campaign("cl2", 6, jobs=2)
    assert one == two
    from copsrobbers.io import parse_graph6

    codes = [canonical_code(parse_graph6(r["graph6"])) for r in one["results"]]
    assert codes == sorted(codes)


def test_predict_fixtures():
    assert len(PREDICT_FIXTURES) >= 20
    for case in PREDICT_FIXTURES:
        assert evaluate_predict_case(case) == case.expected, case
    assert run_campaign("predict", 0)["failed"] == 0
