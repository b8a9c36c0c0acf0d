"""Renyi-2 entropy, mutual information, and entanglement of Gaussian states.

All values are in nats.  The entanglement estimator produces an upper bound
on the Gaussian Renyi-2 entanglement by searching the Bloch-Messiah
parameterization of pure two-mode covariance matrices dominated by the state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.optimize

from . import _kernels
from .phase_space import (
    CovarianceMatrix,
    DimensionError,
    ModePartition,
    PhaseSpaceError,
    partial_trace,
    require_bona_fide,
    symplectic_form,
)

KINDS = ("entropy", "mutual_information", "classical", "discord", "entanglement", "tripartite")

NEGATIVE_CLAMP = 1e-9
PURITY_TOL = 1e-6
FEASIBILITY_TOL = 1e-7


class MixedStateError(PhaseSpaceError):
    """A pure state was required."""


class EntanglementSearchError(RuntimeError):
    """The convex-roof search exhausted its budget without a feasible point."""

    def __init__(self, best_value: float, best_residual: float):
        self.best_value = best_value
        self.best_residual = best_residual
        super().__init__(
            f"no feasible pure state found (best value {best_value:.6g}, "
            f"residual {best_residual:.3g})")


@dataclass(frozen=True)
class CorrelationValue:
    """A nonnegative correlation quantity in nats.

    `residual` carries the feasibility defect of the entanglement search and
    is None for quantities computed without one.
    """

    value: float
    kind: str
    residual: float | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown correlation kind {self.kind!r}")
        v = float(self.value)
        if v < -NEGATIVE_CLAMP:
            raise ValueError(f"correlation value {v} is negative beyond tolerance")
        object.__setattr__(self, "value", max(v, 0.0))

    def __float__(self) -> float:
        return self.value


def _half_logdet(matrix: np.ndarray) -> float:
    sign, logdet = np.linalg.slogdet(matrix)
    if sign <= 0:
        raise PhaseSpaceError("covariance matrix has nonpositive determinant")
    return 0.5 * logdet


def renyi2_entropy(sigma: CovarianceMatrix) -> CorrelationValue:
    """Renyi-2 entropy (1/2) ln det sigma; zero exactly on pure states."""
    require_bona_fide(sigma)
    return CorrelationValue(_half_logdet(sigma.matrix), "entropy")


def wigner_shannon_entropy(sigma: CovarianceMatrix) -> float:
    """Shannon entropy of the Wigner distribution: S2 + N (1 + ln pi)."""
    s2 = renyi2_entropy(sigma).value
    return s2 + sigma.modes * (1.0 + np.log(np.pi))


def mutual_information(sigma: CovarianceMatrix, partition: ModePartition) -> CorrelationValue:
    """Renyi-2 mutual information S2(A) + S2(B) - S2(AB) across a bipartition."""
    partition.check_covers(sigma)
    names = partition.names
    if len(names) != 2:
        raise DimensionError(f"mutual information needs a bipartition, got {len(names)} parts")
    total = _half_logdet(sigma.matrix)
    parts = sum(
        _half_logdet(partial_trace(sigma, partition.modes_of(n)).matrix) for n in names)
    return CorrelationValue(parts - total, "mutual_information")


def pure_state_entanglement(sigma: CovarianceMatrix, partition: ModePartition) -> CorrelationValue:
    """Renyi-2 entropy of entanglement of a pure state: S2 of either marginal."""
    partition.check_covers(sigma)
    if len(partition.names) != 2:
        raise DimensionError("entanglement needs a bipartition")
    if not sigma.is_pure(PURITY_TOL):
        raise MixedStateError(
            f"pure state required, det sigma = {sigma.det():.6g}")
    first = partition.modes_of(partition.names[0])
    return CorrelationValue(
        _half_logdet(partial_trace(sigma, first).matrix), "entanglement")


def _williamson_symplectic(sigma: np.ndarray) -> np.ndarray:
    """Symplectic S with sigma = S D S^T, D the diagonal symplectic-spectrum matrix."""
    n = sigma.shape[0] // 2
    evals, evecs = np.linalg.eigh(sigma)
    root = evecs @ np.diag(np.sqrt(evals)) @ evecs.T
    m = root @ symplectic_form(n) @ root
    # real Schur form of an antisymmetric matrix is block-diagonal with
    # 2x2 blocks nu * [[0, 1], [-1, 0]] up to sign
    t, q = scipy.linalg.schur(m, output="real")
    nus = np.empty(n)
    for k in range(n):
        nu = t[2 * k, 2 * k + 1]
        if nu < 0:
            q[:, [2 * k, 2 * k + 1]] = q[:, [2 * k + 1, 2 * k]]
            nu = -nu
        nus[k] = nu
    dinv_half = np.diag(np.repeat(1.0 / np.sqrt(nus), 2))
    return root @ q @ dinv_half


def _reorder_bipartite(sigma: CovarianceMatrix, partition: ModePartition) -> np.ndarray:
    """4x4 matrix with subsystem A on modes (q1,p1) and B on (q2,p2)."""
    partition.check_covers(sigma)
    names = partition.names
    if len(names) != 2 or any(len(partition.modes_of(n)) != 1 for n in names):
        raise DimensionError("estimator supports 1-vs-1 mode bipartitions only")
    a, b = partition.modes_of(names[0])[0], partition.modes_of(names[1])[0]
    return partial_trace(sigma, (a, b)).matrix


def _min_eig_residual(mineig: float) -> float:
    return max(0.0, -mineig)


def entanglement_estimate(sigma: CovarianceMatrix, partition: ModePartition,
                          budget: int = 20000) -> CorrelationValue:
    """Upper bound on the Gaussian Renyi-2 entanglement of a two-mode state.

    Minimizes (1/2) ln det gamma_A over pure two-mode covariance matrices
    gamma <= sigma, with gamma parameterized by two local symplectics and a
    two-mode squeezing degree.  Domination is enforced by an escalating
    eigenvalue penalty; multi-start Nelder-Mead descent, deterministic for
    fixed inputs.  Raises EntanglementSearchError if no start ends feasible.
    """
    require_bona_fide(sigma)
    mat = np.ascontiguousarray(_reorder_bipartite(sigma, partition))

    candidates: list[tuple[float, float]] = []

    # separable shortcut: if the vacuum fits under sigma the roof is 0
    mineig_vac = float(np.linalg.eigvalsh(mat - np.eye(4))[0])
    if mineig_vac >= -1e-12:
        return CorrelationValue(0.0, "entanglement", residual=_min_eig_residual(mineig_vac))

    # Williamson seed: gamma = S S^T <= sigma always, exact for pure input
    s_w = _williamson_symplectic(mat)
    gamma_w = s_w @ s_w.T
    val_w = _half_logdet(gamma_w[:2, :2])
    resid_w = _min_eig_residual(float(np.linalg.eigvalsh(mat - gamma_w)[0]))
    if resid_w <= FEASIBILITY_TOL:
        candidates.append((max(val_w, 0.0), resid_w))
    r_scale = max(np.arccosh(np.sqrt(max(np.linalg.det(gamma_w[:2, :2]), 1.0))) / 2.0, 0.05)

    def penalized(lam):
        def f(p):
            val, mineig = _kernels.e2_terms(p, mat)
            return val + lam * _min_eig_residual(mineig) ** 2
        return f

    n_starts = 32
    rng = np.random.default_rng(20230415)
    starts = []
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0, 1.25):
        starts.append(np.array([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, frac * r_scale]))
    for zc in (0.4, -0.4):
        starts.append(np.array([0.0, zc, 0.0, 0.0, -zc, 0.0, 0.5 * r_scale]))
    while len(starts) < n_starts:
        p = np.empty(7)
        p[[0, 2, 3, 5]] = rng.uniform(0.0, np.pi, 4)
        p[[1, 4]] = rng.normal(0.0, 0.6, 2)
        p[6] = rng.uniform(0.0, 1.3 * r_scale)
        starts.append(p)

    lams = (1e4, 1e5, 1e6, 1e7, 1e8)
    per_round = max(budget // (n_starts * len(lams)), 40)
    best_params = None
    best_score = np.inf
    for p0 in starts:
        x = p0
        for lam in lams:
            res = scipy.optimize.minimize(
                penalized(lam), x, method="Nelder-Mead",
                options={"maxfev": per_round, "xatol": 1e-11, "fatol": 1e-13})
            x = res.x
        val, mineig = _kernels.e2_terms(x, mat)
        resid = _min_eig_residual(mineig)
        if resid <= FEASIBILITY_TOL:
            candidates.append((max(val, 0.0), resid))
        score = val + 1e8 * resid ** 2
        if score < best_score:
            best_score, best_params = score, x
        if candidates and min(candidates)[0] <= 1e-10:
            # the roof is bounded below by zero; nothing left to gain
            return CorrelationValue(0.0, "entanglement", residual=min(candidates)[1])

    # polish the overall best descent endpoint at the stiffest penalty
    if best_params is not None:
        res = scipy.optimize.minimize(
            penalized(1e9), best_params, method="Nelder-Mead",
            options={"maxfev": 600, "xatol": 1e-12, "fatol": 1e-14})
        val, mineig = _kernels.e2_terms(res.x, mat)
        resid = _min_eig_residual(mineig)
        if resid <= FEASIBILITY_TOL:
            candidates.append((max(val, 0.0), resid))

    if not candidates:
        val, mineig = _kernels.e2_terms(best_params, mat)
        raise EntanglementSearchError(val, _min_eig_residual(mineig))
    value, residual = min(candidates)
    return CorrelationValue(value, "entanglement", residual=residual)
