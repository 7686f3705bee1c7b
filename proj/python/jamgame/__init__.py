"""Rate adaptation against a power-limited jammer."""

from ._jamgame import (
    GameConfig,
    JamgameError,
    convergence_curve,
    effectiveness,
    grid_points,
    jammer_opt,
    jth_limit,
    payoff_matrix,
    powers,
    rates,
    semi_uniform,
    simulate,
    solve,
    sweep,
    threshold,
    transmitter_opt,
)

__all__ = [
    "GameConfig",
    "JamgameError",
    "convergence_curve",
    "effectiveness",
    "grid_points",
    "jammer_opt",
    "jth_limit",
    "payoff_matrix",
    "powers",
    "rates",
    "semi_uniform",
    "simulate",
    "solve",
    "sweep",
    "threshold",
    "transmitter_opt",
]
