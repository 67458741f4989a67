"""scikit-learn facade behaviour."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from paramshell import ConfigError, CriticalLoadEstimator
from paramshell.reference import reference_run_config


def test_get_params_round_trip():
    run = reference_run_config()
    est = CriticalLoadEstimator(run_config=run, sweep_param="winkler")
    params = est.get_params()
    assert params["sweep_param"] == "winkler"
    cloned = clone(est)
    assert cloned.get_params()["run_config"] == run


def test_predict_requires_fit():
    est = CriticalLoadEstimator(run_config=reference_run_config())
    with pytest.raises(NotFittedError):
        est.predict([2.0])


def test_fit_rejects_bad_inputs():
    with pytest.raises(ConfigError):
        CriticalLoadEstimator(run_config=None).fit()
    with pytest.raises(ConfigError):
        CriticalLoadEstimator(
            run_config=reference_run_config(), sweep_param="bogus"
        ).fit()


def test_predict_matches_direct_solve():
    from paramshell import apply_sweep
    from paramshell.runner import run_single

    run = reference_run_config()
    est = CriticalLoadEstimator(run_config=run, sweep_param="ring_count").fit()
    values = [2.0, 6.0]
    preds = est.predict(values)
    direct = [
        run_single(apply_sweep(run, "ring_count", v)).result.p1b for v in values
    ]
    assert preds == pytest.approx(direct, rel=1e-14)
    # column-vector input is accepted too
    col = est.predict(np.asarray(values).reshape(-1, 1))
    assert col == pytest.approx(preds, rel=1e-14)


def test_fit_caches_baseline():
    est = CriticalLoadEstimator(run_config=reference_run_config()).fit()
    assert est.baseline_result_.p1b > 0.0
    assert est.t_char_ > 0.0
