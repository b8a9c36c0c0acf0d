"""Gaussian measurements at covariance-matrix level.

Conditioning on a single-mode Gaussian measurement is a Schur complement of
the measured block against the measurement seed.  One-way classical
correlations maximize the entropy decrease of the unmeasured mode over pure
seeds, by a coarse grid followed by alternating golden-section refinement;
discord is mutual information minus that maximum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .phase_space import (
    CovarianceMatrix,
    DimensionError,
    ModePartition,
    PhaseSpaceError,
    partial_trace,
    require_bona_fide,
    rotation,
)
from .renyi import CorrelationValue, mutual_information

Z_CLAMP = 20.0
GRID_SIZE = 64
Z_GRID_HALF_WIDTH = 8.0
REFINE_ROUNDS = 200
REFINE_RTOL = 1e-9


@dataclass(frozen=True)
class MeasurementSeed:
    """Parameters of a single-mode Gaussian POVM seed state.

    The realized seed CM is (2 n + 1) R(theta) diag(e^{2z}, e^{-2z}) R(theta)^T
    with n the thermal occupancy; pure iff n = 0.
    """

    theta: float
    log_squeeze: float
    thermal: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta < np.pi:
            raise ValueError(f"theta must lie in [0, pi), got {self.theta}")
        if abs(self.log_squeeze) > Z_CLAMP:
            raise ValueError(f"|log_squeeze| must be <= {Z_CLAMP}, got {self.log_squeeze}")
        if self.thermal < 0.0:
            raise ValueError(f"thermal occupancy must be >= 0, got {self.thermal}")

    def cm(self) -> np.ndarray:
        r = rotation(self.theta)
        squeezed = r @ np.diag([np.exp(2.0 * self.log_squeeze),
                                np.exp(-2.0 * self.log_squeeze)]) @ r.T
        return (2.0 * self.thermal + 1.0) * squeezed


@dataclass(frozen=True)
class MeasurementOptimum:
    """Result of the seed optimization: value, attained seed, convergence flag."""

    value: CorrelationValue
    seed: MeasurementSeed
    converged: bool


def _split_blocks(sigma: CovarianceMatrix, partition: ModePartition,
                  measured: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (unmeasured block, measured block, cross block) as 2x2 arrays."""
    partition.check_covers(sigma)
    names = partition.names
    if measured not in names:
        raise DimensionError(f"measured side {measured!r} not in partition {names}")
    if len(names) != 2:
        raise DimensionError("measurement needs a bipartition")
    other = names[0] if names[1] == measured else names[1]
    if len(partition.modes_of(measured)) != 1:
        raise DimensionError("only single-mode measured subsystems are supported")
    u = partition.modes_of(other)
    m = partition.modes_of(measured)[0]
    reordered = partial_trace(sigma, tuple(u) + (m,)).matrix
    k = 2 * len(u)
    return reordered[:k, :k], reordered[k:, k:], reordered[:k, k:]


def conditional_cm(sigma: CovarianceMatrix, partition: ModePartition,
                   seed: MeasurementSeed) -> CovarianceMatrix:
    """CM of the unmeasured side after a seed measurement on the last-named side.

    The measured subsystem is the second name in the partition.  The result is
    the Schur complement sigma_A - ς (sigma_B + Gamma)^{-1} ς^T, independent of
    the measurement outcome.
    """
    require_bona_fide(sigma)
    measured = partition.names[1]
    s_u, s_m, cross = _split_blocks(sigma, partition, measured)
    m = s_m + seed.cm()
    det = np.linalg.det(m)
    if det <= 0 or not np.isfinite(det):
        raise PhaseSpaceError("singular measured block; input not bona fide?")
    return CovarianceMatrix(s_u - cross @ np.linalg.inv(m) @ cross.T)


def _homodyne_limit_logdet(s_u: np.ndarray, s_m: np.ndarray, cross: np.ndarray,
                           theta: float) -> float:
    """log det of the conditional CM in the infinite-squeezing (homodyne) limit.

    The seed diverges along R(theta) e1; the inverse collapses onto the
    complementary direction v = R(theta) e2.
    """
    v = rotation(theta) @ np.array([0.0, 1.0])
    m_inf = np.outer(v, v) / float(v @ s_m @ v)
    cond = s_u - cross @ m_inf @ cross.T
    return float(np.log(np.linalg.det(cond)))


def _objective_on(sigma4, thetas, zs) -> np.ndarray:
    return _kernels.conditional_logdet_grid(
        np.ascontiguousarray(sigma4),
        np.ascontiguousarray(thetas, dtype=float), np.ascontiguousarray(zs, dtype=float))


_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def _golden_max(f, lo: float, hi: float, rounds: int = 40) -> tuple[float, float]:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(rounds):
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = f(d)
    x = 0.5 * (lo + hi)
    return x, f(x)


def classical_correlations(sigma: CovarianceMatrix, partition: ModePartition,
                           measured: str) -> MeasurementOptimum:
    """One-way classical correlations via the best pure Gaussian seed.

    Maximizes (1/2) ln(det sigma_u / det conditional) over pure seeds
    (theta, z); the returned optimum carries the attained seed.  measured
    names the side the measurement acts on.
    """
    require_bona_fide(sigma)
    s_u, _, _ = _split_blocks(sigma, partition, measured)
    if s_u.shape[0] != 2:
        raise DimensionError("only two-mode states are supported for J2/D2")
    other = [n for n in partition.names if n != measured][0]
    reorder = partition.modes_of(other) + partition.modes_of(measured)
    sigma4 = partial_trace(sigma, reorder).matrix
    logdet_u = float(np.log(np.linalg.det(s_u)))

    thetas = np.linspace(0.0, np.pi, GRID_SIZE, endpoint=False)
    zs = np.linspace(-Z_GRID_HALF_WIDTH, Z_GRID_HALF_WIDTH, GRID_SIZE)
    tg, zg = np.meshgrid(thetas, zs, indexing="ij")
    vals = _objective_on(sigma4, tg.ravel(), zg.ravel())

    # ties broken by smaller |z|, then smaller theta
    best = np.min(vals)
    near = np.flatnonzero(vals <= best + 1e-12 * (1.0 + abs(best)))
    order = sorted(near, key=lambda k: (abs(zg.ravel()[k]), tg.ravel()[k]))
    k0 = order[0]
    theta, z = float(tg.ravel()[k0]), float(zg.ravel()[k0])

    def f_theta(t):
        return -float(_objective_on(sigma4, np.array([t]), np.array([z]))[0])

    def f_z(zz):
        return -float(_objective_on(sigma4, np.array([theta]), np.array([zz]))[0])

    dt = np.pi / GRID_SIZE
    dz = 2.0 * Z_GRID_HALF_WIDTH / (GRID_SIZE - 1)
    current = -float(vals[k0])
    converged = False
    for _ in range(REFINE_ROUNDS):
        theta, _ = _golden_max(f_theta, theta - dt, theta + dt)
        zlo = max(z - dz, -Z_CLAMP)
        zhi = min(z + dz, Z_CLAMP)
        if abs(z) >= Z_GRID_HALF_WIDTH - 1e-9:
            # grid edge: open the window up to the clamp boundary
            zlo, zhi = (z, Z_CLAMP) if z > 0 else (-Z_CLAMP, z)
        z, new = _golden_max(f_z, zlo, zhi)
        if new - current <= REFINE_RTOL * (1.0 + abs(current)):
            current = max(new, current)
            converged = True
            break
        current = new

    value = CorrelationValue(0.5 * (logdet_u + current), "classical")
    seed = MeasurementSeed(theta=float(theta) % np.pi, log_squeeze=float(np.clip(z, -Z_CLAMP, Z_CLAMP)))
    return MeasurementOptimum(value=value, seed=seed, converged=converged)


def discord(sigma: CovarianceMatrix, partition: ModePartition, measured: str) -> CorrelationValue:
    """Renyi-2 discord: mutual information minus one-way classical correlations."""
    i2 = mutual_information(sigma, partition)
    j2 = classical_correlations(sigma, partition, measured)
    return CorrelationValue(i2.value - j2.value.value, "discord")
