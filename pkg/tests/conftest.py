import numpy as np
import pytest

import kstieltjes as ks
from kstieltjes.intervals import Interval


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def specs(tmp_path, monkeypatch):
    """Deterministic CLI spec fixtures; tests run with the tmp dir as cwd
    so the report paths (and hence the goldens) are stable."""
    monkeypatch.chdir(tmp_path)
    ks.save_function(ks.scaled_identity((0.0, 1.0), [0.0, 1.0], dim=1), "F_ramp.json")
    ks.save_function(ks.constant((0.0, 1.0), 1.0), "g_one.json")
    ks.save_function(ks.step((0.0, 1.0), Interval.closed(0.5, 1.0),
                             np.array([[1.0]])), "F_step.json")
    ks.save_function(ks.polynomial((0.0, 1.0), [0.0, 1.0]), "g_ramp.json")
    hat = ks.PiecewiseFunction([0.0, 0.5, 1.0],
                               [np.array([[0.0], [2.0]]), np.array([[2.0], [-2.0]])],
                               [[0.0], [1.0], [0.0]])
    ks.save_function(hat, "f_hat.json")
    mixed = ks.lincomb(1.0, ks.polynomial((0.0, 1.0), [0.0, 1.0]),
                       1.0, ks.step((0.0, 1.0), Interval(0.5, 1.0, False, True), 1.0))
    ks.save_function(mixed, "f_mixed.json")
    return tmp_path
