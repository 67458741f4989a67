"""scikit-learn-compatible facade over the critical-amplitude solver.

The estimator treats a one-dimensional array of sweep-parameter values as
``X`` and predicts the critical pulsation amplitude at each value.  It is
a thin convenience wrapper for pipeline-style use; the underlying
computation is deterministic physics, not fitting, so ``fit`` only
validates the configuration and caches the baseline solution.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .config import SWEEP_PARAMETERS, RunConfig, apply_sweep
from .errors import ConfigError
from .runner import run_single


class CriticalLoadEstimator(BaseEstimator):
    """Predict critical pulsating-load amplitudes over a swept parameter.

    Parameters
    ----------
    run_config : RunConfig
        Fully validated baseline configuration.
    sweep_param : str
        Which parameter the rows of ``X`` override.
    """

    def __init__(self, run_config: RunConfig | None = None,
                 sweep_param: str = "ring_count"):
        self.run_config = run_config
        self.sweep_param = sweep_param

    def fit(self, X=None, y=None):
        """Validate the configuration and solve the baseline problem."""
        if not isinstance(self.run_config, RunConfig):
            raise ConfigError("run_config must be a RunConfig instance")
        if self.sweep_param not in SWEEP_PARAMETERS:
            raise ConfigError(
                f"sweep_param {self.sweep_param!r} not one of {SWEEP_PARAMETERS}"
            )
        outcome = run_single(self.run_config)
        self.baseline_result_ = outcome.result
        self.t_char_ = outcome.t_char
        self.n_features_in_ = 1
        return self

    def predict(self, X):
        """Critical amplitude p1b at each sweep value in ``X``.

        ``X`` may be a 1-d sequence or an (n, 1) column of sweep values.
        """
        check_is_fitted(self, "baseline_result_")
        values = np.asarray(X, dtype=float)
        if values.ndim == 2 and values.shape[1] == 1:
            values = values[:, 0]
        if values.ndim != 1:
            raise ValueError("X must be one-dimensional or a single column")
        out = np.empty(values.shape[0], dtype=float)
        for i, value in enumerate(values):
            point = apply_sweep(self.run_config, self.sweep_param, float(value))
            out[i] = run_single(point).result.p1b
        return out
