import json
import math

import pytest

import auxmean


def test_zeta_and_theta():
    assert abs(auxmean.zeta(2) - math.pi**2 / 6) < 1e-13
    assert abs(auxmean.theta(-10.0) + auxmean.theta(10.0)) < 1e-14


def test_eval_aux_dispatch():
    value, method, err = auxmean.eval_aux(0.5, 20.0)
    assert method == "DirectContour"
    assert err < 1e-9
    value_hi, method_hi, _ = auxmean.eval_aux(0.5, 800.0)
    assert method_hi == "MainSum"
    assert abs(value_hi - auxmean.main_sum(0.5, 800.0)) < 1e-12


def test_mean_value_and_predictor():
    T = 2 * math.pi * 20
    (row,) = auxmean.mean_value(0.0, [T], weighted=True, threads=2)
    main, exponent, regime = auxmean.predict(0.0, T)
    assert regime == "weighted:0<=sigma<=1/4"
    assert exponent == 0.25
    assert abs(row["value"] - main) < 3 * T**0.25
    assert row["n_evals"] > 0


def test_laplace_predictors():
    assert abs(auxmean.predict_laplace_weighted(-1.0, 0.5) - 1 / 3) < 1e-15
    assert auxmean.predict_laplace_weighted(0.0, 0.1) == pytest.approx(auxmean.predict_laplace_unweighted(0.0, 0.1))
    assert auxmean.exp_poly_integral(1.0, 0.3) == pytest.approx(1.3 * math.exp(-0.3) / 0.09, rel=1e-12)


def test_lemma_oracles():
    assert auxmean.lemma1_max_ratio(1, 100) <= 1.0
    assert abs(auxmean.osc_integral(1.0, 2.0, 1.0, 10.0) - 0.2494626971433609566) < 1e-12


def test_errors_map_to_python():
    with pytest.raises(auxmean.DomainError):
        auxmean.predict_laplace_weighted(0.5, 0.1)
    with pytest.raises(auxmean.ConfigError):
        auxmean.parse_config("nonsense = 1\n")
    with pytest.raises(auxmean.Error):
        auxmean.mean_value(0.0, [100.0, 50.0])


def test_config_echo():
    cfg = json.loads(auxmean.parse_config("sigma_list = 0, 0.5\nT_grid = 2*pi*10\n"))
    assert cfg["sigma_list"] == [0.0, 0.5]
    assert cfg["T_grid"][0] == pytest.approx(2 * math.pi * 10)
