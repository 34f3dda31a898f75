from .base import CopStrategy, MembershipError, StrategyError
from .chase import (
    TrainChaseState,
    chase_advance,
    chase_start,
    check_chase_invariants,
    theta,
    train_chase,
    train_positions,
)
from .claw_free import strategy_cl1, strategy_cl2, strategy_cl3
from .claw_net import strategy_gen_claw_net
from .layers import LayeredDecomposition, LayerReport, layered_decomposition, validate_layers
from .pk_free import strategy_pk_free
from .verify import Outcome, StationaryCops, Verdict, adversarial_verify

__all__ = [
    "CopStrategy",
    "LayerReport",
    "LayeredDecomposition",
    "MembershipError",
    "Outcome",
    "StationaryCops",
    "StrategyError",
    "TrainChaseState",
    "Verdict",
    "adversarial_verify",
    "chase_advance",
    "chase_start",
    "check_chase_invariants",
    "layered_decomposition",
    "strategy_cl1",
    "strategy_cl2",
    "strategy_cl3",
    "strategy_gen_claw_net",
    "strategy_pk_free",
    "theta",
    "train_chase",
    "train_positions",
    "validate_layers",
]
