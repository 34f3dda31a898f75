"""Desk-scale verification campaigns over small-graph corpora.

Every campaign enumerates a class of connected graphs, checks each member
independently and aggregates pass/fail counts. Members are checked by
module-level functions so they can be fanned out to worker processes.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from .enumerate import canonical_code, enumerate_hereditary
from .generators import random_connected
from .graph import Graph
from .io import emit_graph6, parse_graph6
from .patterns import (
    CL,
    CL1,
    CL2,
    CL3,
    HypothesisViolation,
    is_family_free,
    parse_family,
    predict_cop_bounded,
    predict_cop_bounded_components,
)
from .solver import GameState, Mover, cop_number, optimal_robber_reply, solve
from .strategies import (
    StrategyError,
    adversarial_verify,
    layered_decomposition,
    strategy_cl1,
    strategy_cl2,
    strategy_cl3,
    strategy_gen_claw_net,
    strategy_pk_free,
    train_chase,
    validate_layers,
)
from .transforms import clique_substitution, subdivide

VERIFY_STEP_BUDGET = 400


@lru_cache(maxsize=None)
def _class_level(family_spec: str, n: int) -> tuple[Graph, ...]:
    F = parse_family(family_spec) if family_spec else []
    return tuple(enumerate_hereditary(n, lambda G: is_family_free(G, F)))


def corpus(family_spec: str, nmax: int, nmin: int = 1) -> list[Graph]:
    """Connected ``F``-free graphs with ``nmin <= n <= nmax`` (``""``: all)."""
    out: list[Graph] = []
    for n in range(nmin, nmax + 1):
        out += _class_level(family_spec, n)
    return out


LAYER_CLASSES = {"a": CL, "b": CL1, "c": CL2, "d": CL3}


# -- per-instance checks -------------------------------------------------------


def _strategy_check(G: Graph, make: Callable, max_turns: int | None, solver_k: int | None) -> dict:
    row: dict[str, Any] = {}
    try:
        verdict = adversarial_verify(G, make(G), VERIFY_STEP_BUDGET)
    except StrategyError as exc:
        return {"ok": False, "error": f"strategy failure: {exc}"}
    row["verdict"] = verdict.as_dict()
    ok = verdict.captured
    if ok and max_turns is not None and verdict.max_steps > max_turns:
        ok = False
        row["error"] = f"capture took {verdict.max_steps} > {max_turns} cop turns"
    if solver_k is not None:
        c = cop_number(G, k_max=solver_k)
        row["cop_number"] = c
    row["ok"] = ok
    return row


def check_cl1(G: Graph) -> dict:
    return _strategy_check(G, strategy_cl1, None, 2)


def check_cl2(G: Graph) -> dict:
    return _strategy_check(G, strategy_cl2, None, 3)


def check_cl3(G: Graph) -> dict:
    return _strategy_check(G, strategy_cl3, None, 5)


def check_pk_free(G: Graph, k: int) -> dict:
    row = _strategy_check(G, lambda H: strategy_pk_free(H, k), k - 1, None)
    win = bool(solve(G, k - 2).cop_win)
    row["solver_cop_win"] = win
    row["ok"] = row["ok"] and win
    return row


def check_claw_net(G: Graph, n: int) -> dict:
    return _strategy_check(G, lambda H: strategy_gen_claw_net(H, n), None, 4 * n)


def check_monotone(G: Graph) -> dict:
    c = cop_number(G)
    K, _ = clique_substitution(G)
    row: dict[str, Any] = {"cop_number": c}
    images = {"cliquesub": K, "subdivide1": subdivide(G, 1), "subdivide2": subdivide(G, 2)}
    ok = True
    for name, H in images.items():
        if H.n == 0:
            # K(K_1) is empty; the single-vertex graph has nothing to compare
            row[name] = None
            continue
        cH = cop_number(H)
        row[name] = cH
        ok = ok and cH >= c
    row["ok"] = ok
    return row


def check_layers(G: Graph, variant: str) -> dict:
    failures = []
    for u0 in range(G.n):
        for u1 in sorted(G.adj[u0]):
            rep = validate_layers(layered_decomposition(G, u0, u1), variant)
            if not rep.ok:
                failures.append({"u0": u0, "u1": u1, "layer": rep.layer, "witness": rep.witness, "reason": rep.reason})
    return {"ok": not failures, "failures": failures[:3]}


def _with_cop_bound(row: dict, bound: int) -> dict:
    if "cop_number" in row:
        row["ok"] = row["ok"] and row["cop_number"] <= bound
    return row


_CHECKS: dict[str, Callable[..., dict]] = {
    "cl1": lambda G: _with_cop_bound(check_cl1(G), 2),
    "cl2": lambda G: _with_cop_bound(check_cl2(G), 3),
    "cl3": lambda G: _with_cop_bound(check_cl3(G), 5),
}


def _run_one(args: tuple[str, str, str | None]) -> dict:
    theorem, g6, param = args
    G = parse_graph6(g6)
    if theorem in _CHECKS:
        row = _CHECKS[theorem](G)
    elif theorem == "pkfree":
        row = check_pk_free(G, int(param))
    elif theorem == "clawnet":
        n = int(param)
        row = _with_cop_bound(check_claw_net(G, n), 4 * n)
    elif theorem == "monotone":
        row = check_monotone(G)
    elif theorem == "layers":
        row = check_layers(G, param)
    else:
        raise ValueError(f"unknown theorem {theorem!r}")
    return {"graph6": g6, "n": G.n, **row}


# -- predicates fixture --------------------------------------------------------


@dataclass(frozen=True)
class PredictCase:
    predicate: str  # "connected" or "components"
    family: str
    k: int
    expected: bool | str  # "error" for a hypothesis violation


PREDICT_FIXTURES: tuple[PredictCase, ...] = (
    PredictCase("connected", "p5", 5, True),
    PredictCase("connected", "claw", 3, False),
    PredictCase("connected", "claw,net", 4, True),
    PredictCase("connected", "p2", 2, True),
    PredictCase("connected", "net", 4, False),
    PredictCase("connected", "bull", 4, False),
    PredictCase("connected", "claw,bull", 4, True),
    PredictCase("connected", "genclaw:2,2,2,gennet:3,3,3", 8, True),
    PredictCase("connected", "genclaw:2,1,1", 4, False),
    PredictCase("connected", "antenna", 4, False),
    PredictCase("connected", "claw,antenna", 4, False),
    PredictCase("connected", "claw,net,antenna", 4, True),
    PredictCase("connected", "p3,claw", 3, True),
    PredictCase("components", "p3+p5", 5, True),
    PredictCase("components", "claw+p2,net+p2", 4, True),
    PredictCase("components", "claw+net", 4, False),
    PredictCase("components", "claw+claw", 3, False),
    PredictCase("components", "claw+p2,bull", 4, True),
    PredictCase("components", "net+net,claw", 4, True),
    PredictCase("components", "p2+p2", 2, True),
    PredictCase("components", "claw+net", 3, "error"),
    PredictCase("connected", "p2+p2", 5, "error"),
)


def evaluate_predict_case(case: PredictCase) -> bool | str:
    F = parse_family(case.family)
    fn = predict_cop_bounded if case.predicate == "connected" else predict_cop_bounded_components
    try:
        return fn(F, case.k)
    except HypothesisViolation:
        return "error"


def run_predict() -> dict:
    rows = []
    for case in PREDICT_FIXTURES:
        got = evaluate_predict_case(case)
        rows.append(
            {
                "predicate": case.predicate,
                "family": case.family,
                "k": case.k,
                "expected": case.expected,
                "got": got,
                "ok": got == case.expected,
            }
        )
    return _summary("predict", rows)


# -- campaign driver -----------------------------------------------------------


def parse_theorem(spec: str) -> tuple[str, str | None]:
    name, _, param = spec.partition(":")
    name = name.strip().lower()
    known = {"cl1", "cl2", "cl3", "pkfree", "clawnet", "monotone", "layers", "predict"}
    if name not in known:
        raise ValueError(f"unknown theorem {spec!r}")
    if name in ("pkfree", "clawnet"):
        if not param.isdigit():
            raise ValueError(f"{name} needs an integer parameter, e.g. {name}:4")
        if name == "pkfree" and int(param) < 3:
            raise ValueError("pkfree needs k >= 3")
        if name == "clawnet" and int(param) < 1:
            raise ValueError("clawnet needs n >= 1")
    elif name == "layers":
        if param not in LAYER_CLASSES:
            raise ValueError("layers needs a variant a, b, c or d")
    elif param:
        raise ValueError(f"{name} takes no parameter")
    return name, (param or None)


def theorem_corpus(name: str, param: str | None, nmax: int) -> list[Graph]:
    if name == "cl1":
        return corpus(",".join(CL1), nmax)
    if name == "cl2":
        return corpus(",".join(CL2), nmax)
    if name == "cl3":
        return corpus(",".join(CL3), nmax)
    if name == "pkfree":
        return corpus(f"p{param}", nmax)
    if name == "clawnet":
        n = int(param)
        return corpus(f"genclaw:{n},{n},{n},gennet:{n},{n},{n}", nmax)
    if name == "monotone":
        return corpus("", nmax)
    if name == "layers":
        return corpus(",".join(LAYER_CLASSES[param]), nmax, nmin=2)
    raise ValueError(name)


def run_campaign(theorem: str, nmax: int, jobs: int = 1) -> dict:
    """Run one campaign; the result is independent of ``jobs``."""
    name, param = parse_theorem(theorem)
    if name == "predict":
        return run_predict()
    graphs = theorem_corpus(name, param, nmax)
    graphs.sort(key=canonical_code)
    tasks = [(name, emit_graph6(G), param) for G in graphs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_one, tasks, chunksize=8))
    else:
        rows = [_run_one(t) for t in tasks]
    return _summary(theorem, rows)


def _summary(theorem: str, rows: list[dict]) -> dict:
    failures = [r for r in rows if not r["ok"]]
    return {
        "theorem": theorem,
        "instances": len(rows),
        "passed": len(rows) - len(failures),
        "failed": len(failures),
        "counterexamples": failures[:20],
        "results": rows,
    }


def spot_check_components(nmax: int = 6, bound: int = 4) -> dict:
    """Exact cop numbers on connected {claw+P2, net+P2}-free graphs."""
    spec = "claw+p2,net+p2"
    rows = []
    for G in corpus(spec, nmax):
        c = cop_number(G, k_max=bound + 1)
        rows.append({"graph6": emit_graph6(G), "n": G.n, "cop_number": c, "ok": c <= bound})
    return _summary(f"components:{spec}", rows)


def _chase_one(i: int) -> dict:
    n = 8 + (i * 7919) % 33
    p = (0.1, 0.3)[i % 2]
    G = random_connected(n, p, i)
    if G.n < 2:
        return {"index": i, "n": G.n, "phases": 0, "violations": []}
    if i % 2 == 0:
        # optimal 2-cop robber: stays alive as long as the game allows
        k = 2
        R = solve(G, k)

        def reply(cops, r):
            return optimal_robber_reply(R, GameState(tuple(sorted(cops)), r, Mover.ROBBER))

        def place(cops):
            row = R.cop_depth[R.index[tuple(sorted(cops))]]
            return max(range(G.n), key=lambda r: (row[r] < 0, row[r]))

    else:
        k = 4
        rng = random.Random(i)

        def reply(cops, r):
            return rng.choice(sorted(G.closed_neighborhood(r)))

        def place(cops):
            return rng.randrange(G.n)

    out = train_chase(G, k, reply, place_robber=place)
    return {"index": i, "n": G.n, "k": k, "phases": len(out.history) - 1, "violations": out.violations}


def chase_invariant_sweep(count: int = 500) -> dict:
    """Train-chase on seeded random connected graphs, checking invariants.

    Graph ``i`` has ``8 + (7919 i mod 33)`` vertices, edge probability 0.1
    or 0.3 and seed ``i``; its largest component is used. Even ``i`` face
    the optimal robber of the 2-cop game, odd ``i`` a seeded random walker
    against 4 cops.
    """
    rows = [_chase_one(i) for i in range(count)]
    for r in rows:
        r["ok"] = not r["violations"]
    out = _summary("trainchase", rows)
    out["phases"] = sum(r["phases"] for r in rows)
    return out
