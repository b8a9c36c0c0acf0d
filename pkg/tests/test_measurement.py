import numpy as np
import pytest

from gaussia.measurement import (
    MeasurementSeed,
    _homodyne_limit_logdet,
    _objective_on,
    _split_blocks,
    classical_correlations,
    conditional_cm,
    discord,
)
from gaussia.phase_space import (
    DimensionError,
    ModePartition,
    apply_symplectic,
    two_mode_squeezer,
    vacuum_cm,
)
from gaussia.unruh import FrameScenario, observed_pair

AB = ModePartition.bipartite((0,), (1,))


def tms(s):
    return apply_symplectic(vacuum_cm(2), two_mode_squeezer(s, 0, 1, 2))


def test_seed_validation():
    MeasurementSeed(theta=0.0, log_squeeze=0.0)
    with pytest.raises(ValueError):
        MeasurementSeed(theta=np.pi, log_squeeze=0.0)
    with pytest.raises(ValueError):
        MeasurementSeed(theta=0.0, log_squeeze=21.0)
    with pytest.raises(ValueError):
        MeasurementSeed(theta=0.0, log_squeeze=0.0, thermal=-1.0)


def test_seed_cm_det():
    seed = MeasurementSeed(theta=0.4, log_squeeze=0.7, thermal=0.5)
    assert abs(np.linalg.det(seed.cm()) - (2.0 * 0.5 + 1.0) ** 2) < 1e-12


def test_conditional_cm_heterodyne_on_tms():
    # vacuum seed on mode B of a two-mode squeezed state
    s = 0.9
    seed = MeasurementSeed(theta=0.0, log_squeeze=0.0)
    cond = conditional_cm(tms(s), AB, seed)
    c2 = np.cosh(2.0 * s)
    expected = (c2 - np.sinh(2.0 * s) ** 2 / (c2 + 1.0)) * np.eye(2)
    assert np.allclose(cond.matrix, expected, atol=1e-12)


def test_conditional_never_exceeds_marginal():
    pair = observed_pair(FrameScenario("a", s=0.83, r=1.0))
    s_u = pair.matrix[:2, :2]
    for theta in (0.0, 0.7, 1.4):
        for z in (-2.0, 0.0, 2.0):
            cond = conditional_cm(pair, AB, MeasurementSeed(theta, z)).matrix
            assert np.linalg.eigvalsh(s_u - cond)[0] >= -1e-10


def test_objective_matches_conditional_logdet():
    pair = observed_pair(FrameScenario("a", s=0.6, r=0.8))
    theta, z = 0.3, -0.9
    val = _objective_on(pair.matrix, np.array([theta]), np.array([z]))[0]
    cond = conditional_cm(pair, AB, MeasurementSeed(theta, z))
    assert abs(val - np.log(np.linalg.det(cond.matrix))) < 1e-10


def test_homodyne_limit_agreement():
    # z = +/-20 must sit on the analytic infinite-squeezing limit
    pair = observed_pair(FrameScenario("a", s=0.83, r=1.0))
    s_u, s_m, cross = _split_blocks(pair, AB, "B")
    for theta in (0.0, 0.5, 1.1, 2.3):
        lim_p = _homodyne_limit_logdet(s_u, s_m, cross, theta)
        lim_m = _homodyne_limit_logdet(s_u, s_m, cross, theta + np.pi / 2.0)
        at_p = _objective_on(pair.matrix, np.array([theta]), np.array([20.0]))[0]
        at_m = _objective_on(pair.matrix, np.array([theta]), np.array([-20.0]))[0]
        assert abs(at_p - lim_p) < 1e-8
        assert abs(at_m - lim_m) < 1e-8


def test_classical_correlations_pure_state():
    s = 0.828727
    opt = classical_correlations(tms(s), AB, measured="B")
    assert abs(opt.value.value - np.log(np.cosh(2.0 * s))) < 1e-6
    assert opt.converged


def test_product_state_zero_both_directions():
    v = vacuum_cm(2)
    for side in ("A", "B"):
        assert classical_correlations(v, AB, side).value.value <= 1e-9
        assert discord(v, AB, side).value <= 1e-9


def test_direction_asymmetry_under_acceleration():
    pair = observed_pair(FrameScenario("a", s=0.83, r=1.0))
    part = ModePartition({"A": (0,), "R": (1,)})
    j_ar = classical_correlations(pair, part, "R").value.value
    j_ra = classical_correlations(pair, part, "A").value.value
    assert j_ar > j_ra + 0.1


def test_discord_bounds():
    from gaussia.renyi import mutual_information
    pair = observed_pair(FrameScenario("b", s=0.83, w=1.0, r=0.7))
    part = ModePartition({"A": (0,), "R": (1,)})
    i2 = mutual_information(pair, part).value
    for side in ("A", "R"):
        d = discord(pair, part, side).value
        j = classical_correlations(pair, part, side).value.value
        assert -1e-8 <= d <= i2 + 1e-8
        assert -1e-8 <= j <= i2 + 1e-8


def test_rejects_multimode_measured_side():
    part = ModePartition.bipartite((0,), (1, 2))
    with pytest.raises(DimensionError):
        classical_correlations(vacuum_cm(3), part, measured="B")
