import numpy as np
import pytest

from gaussia.closed_forms import q2_tripartite_closed
from gaussia.phase_space import CovarianceMatrix, DimensionError, vacuum_cm
from gaussia.renyi import MixedStateError
from gaussia.tripartite import (
    minimize_over_hub,
    residual_discord,
    residual_entanglement,
    tripartite_report,
)
from gaussia.unruh import setting_a

BUDGET = 6000


def test_requires_pure_three_mode():
    with pytest.raises(DimensionError):
        residual_discord(vacuum_cm(2))
    with pytest.raises(MixedStateError):
        residual_discord(CovarianceMatrix(2.0 * np.eye(6)))


def test_no_acceleration_no_residual():
    sigma = setting_a(0.83, 0.0)
    assert abs(residual_discord(sigma)) < 1e-8
    assert abs(residual_entanglement(sigma, budget=BUDGET)) < 1e-6


def test_residuals_match_closed_form():
    s, r = 0.828727, 1.0
    sigma = setting_a(s, r)
    q2 = q2_tripartite_closed(s, r)
    assert abs(residual_discord(sigma) - q2) < 1e-5
    assert abs(residual_entanglement(sigma, budget=BUDGET) - q2) < 1e-2


def test_report_consistency():
    s, r = 0.828727, 1.0
    rep = tripartite_report(setting_a(s, r), budget=BUDGET)
    assert rep.hub == "R"
    # the 1-vs-2 terms coincide with the hub entropy on a pure state
    assert rep.e2_hub_vs_rest == rep.d2_hub_given_rest
    assert abs(rep.residual_discord
               - (rep.d2_hub_given_rest - rep.d2_hub_given_first - rep.d2_hub_given_second)) < 1e-12
    # monogamy: the 1-vs-2 entanglement dominates the two 1-vs-1 terms
    assert rep.e2_hub_vs_rest >= rep.e2_hub_first + rep.e2_hub_second - 5e-3
    d = rep.to_json_dict()
    assert set(d) == {"hub", "E2_hub_vs_rest", "E2_hub_first", "E2_hub_second",
                      "D2_hub_given_rest", "D2_hub_given_first", "D2_hub_given_second",
                      "residual_entanglement", "residual_discord"}


def test_discord_vs_entanglement_ordering():
    # on these states D2(R|Rbar) stays below E2(R:Rbar)
    rep = tripartite_report(setting_a(0.828727, 1.0), budget=BUDGET)
    assert rep.d2_hub_given_second <= rep.e2_hub_second + 5e-3


def test_terms_increase_with_acceleration():
    s = 0.828727
    d2_prev = e2_prev = -np.inf
    for r in (0.5, 1.0, 1.5, 2.0, 2.5):
        rep = tripartite_report(setting_a(s, r), budget=BUDGET)
        assert rep.d2_hub_given_second > d2_prev
        assert rep.e2_hub_second > e2_prev
        d2_prev, e2_prev = rep.d2_hub_given_second, rep.e2_hub_second


def test_minimizer_is_rob():
    hub, val = minimize_over_hub(setting_a(0.828727, 1.0), "discord")
    assert hub == "R"
    assert abs(val - q2_tripartite_closed(0.828727, 1.0)) < 1e-5
    with pytest.raises(ValueError):
        minimize_over_hub(setting_a(0.5, 1.0), "bogus")
