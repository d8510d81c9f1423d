"""Auxiliary function R(s) of the zeta function: evaluation, mean values, Laplace check."""

from ._auxmean import (
    BudgetError,
    CacheIntegrityError,
    ConfigError,
    ConvergenceError,
    DomainError,
    Error,
    PoleError,
    euler_scaled_residual,
    eval_aux,
    exp_poly_integral,
    laplace_scan,
    lemma1_max_ratio,
    main_sum,
    mean_value,
    osc_integral,
    parse_config,
    predict,
    predict_laplace_unweighted,
    predict_laplace_weighted,
    run_criterion,
    theta,
    zeta,
)

__all__ = [
    "BudgetError",
    "CacheIntegrityError",
    "ConfigError",
    "ConvergenceError",
    "DomainError",
    "Error",
    "PoleError",
    "euler_scaled_residual",
    "eval_aux",
    "exp_poly_integral",
    "laplace_scan",
    "lemma1_max_ratio",
    "main_sum",
    "mean_value",
    "osc_integral",
    "parse_config",
    "predict",
    "predict_laplace_unweighted",
    "predict_laplace_weighted",
    "run_criterion",
    "theta",
    "zeta",
]
