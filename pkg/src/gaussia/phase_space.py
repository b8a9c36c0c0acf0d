"""Covariance matrices and symplectic transformations for N-mode Gaussian states.

Quadrature ordering is interleaved, (q1, p1, ..., qN, pN), with the vacuum
covariance matrix normalized to the identity.  First moments are fixed at
zero everywhere and never represented.  Mode indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

SYMMETRY_TOL = 1e-12
SYMPLECTIC_TOL = 1e-10
BONA_FIDE_TOL = 1e-9


class PhaseSpaceError(ValueError):
    """Invalid phase-space object or operation."""


class DimensionError(PhaseSpaceError):
    """Mismatched or invalid matrix/mode dimensions."""


class NotBonaFideError(PhaseSpaceError):
    """Covariance matrix violates the uncertainty principle."""


def symplectic_form(n: int) -> np.ndarray:
    """Return the 2n x 2n symplectic form, a direct sum of n blocks [[0,1],[-1,0]]."""
    if n < 1:
        raise DimensionError(f"mode count must be >= 1, got {n}")
    omega = np.zeros((2 * n, 2 * n))
    for k in range(n):
        omega[2 * k, 2 * k + 1] = 1.0
        omega[2 * k + 1, 2 * k] = -1.0
    return omega


@dataclass(frozen=True)
class CovarianceMatrix:
    """Second-moment matrix of an N-mode Gaussian state (vacuum = identity).

    The constructor enforces symmetry only; physicality is checked on demand
    with :func:`is_bona_fide` so that deliberately unphysical matrices can be
    built and probed in tests.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 or m.shape[0] == 0:
            raise DimensionError(f"covariance matrix must be 2N x 2N, got shape {m.shape}")
        # 1e-12 absolute at vacuum scale, relative for large-squeezing entries
        if np.max(np.abs(m - m.T)) > SYMMETRY_TOL * max(1.0, np.max(np.abs(m))):
            raise PhaseSpaceError("covariance matrix is not symmetric within 1e-12")
        m = 0.5 * (m + m.T)
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def modes(self) -> int:
        return self.matrix.shape[0] // 2

    def det(self) -> float:
        return float(np.linalg.det(self.matrix))

    def is_pure(self, tol: float = 1e-6) -> bool:
        return abs(self.det() - 1.0) <= tol


@dataclass(frozen=True)
class SymplecticTransform:
    """2N x 2N real matrix S with S^T Omega S = Omega (and hence det S = 1)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2 or m.shape[0] == 0:
            raise DimensionError(f"symplectic matrix must be 2N x 2N, got shape {m.shape}")
        omega = symplectic_form(m.shape[0] // 2)
        # 1e-10 absolute near the identity, relative once entries get large
        scale = max(1.0, float(np.max(np.abs(m))) ** 2)
        if np.max(np.abs(m.T @ omega @ m - omega)) > SYMPLECTIC_TOL * scale:
            raise PhaseSpaceError("matrix does not preserve the symplectic form")
        if scale * np.finfo(float).eps < 1e-4:
            # beyond this conditioning det = 1 is not numerically checkable;
            # the (scaled) symplectic-form identity above still guards validity
            sign, logdet = np.linalg.slogdet(m)
            if sign <= 0 or abs(logdet) > SYMPLECTIC_TOL * scale:
                raise PhaseSpaceError("symplectic matrix must have unit determinant")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def modes(self) -> int:
        return self.matrix.shape[0] // 2


@dataclass(frozen=True)
class ModePartition:
    """Named, disjoint, ordered groups of mode indices (0-based)."""

    subsystems: Mapping[str, tuple[int, ...]]

    def __post_init__(self):
        subs = {name: tuple(int(i) for i in idx) for name, idx in self.subsystems.items()}
        if not subs or all(len(v) == 0 for v in subs.values()):
            raise PhaseSpaceError("partition needs at least one nonempty subsystem")
        seen: set[int] = set()
        for name, idx in subs.items():
            for i in idx:
                if i < 0:
                    raise DimensionError(f"negative mode index {i} in subsystem {name!r}")
                if i in seen:
                    raise PhaseSpaceError(f"mode {i} assigned to more than one subsystem")
                seen.add(i)
        object.__setattr__(self, "subsystems", subs)

    @classmethod
    def bipartite(cls, a: Sequence[int], b: Sequence[int],
                  names: tuple[str, str] = ("A", "B")) -> "ModePartition":
        return cls({names[0]: tuple(a), names[1]: tuple(b)})

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.subsystems)

    def modes_of(self, name: str) -> tuple[int, ...]:
        return self.subsystems[name]

    def all_modes(self) -> tuple[int, ...]:
        out: list[int] = []
        for idx in self.subsystems.values():
            out.extend(idx)
        return tuple(out)

    def check_covers(self, sigma: CovarianceMatrix):
        if sorted(self.all_modes()) != list(range(sigma.modes)):
            raise DimensionError(
                f"partition over modes {sorted(self.all_modes())} does not cover a "
                f"{sigma.modes}-mode state")


def _quad_indices(modes: Sequence[int]) -> np.ndarray:
    idx = []
    for m in modes:
        idx.extend((2 * m, 2 * m + 1))
    return np.array(idx, dtype=int)


def vacuum_cm(n: int) -> CovarianceMatrix:
    """Vacuum state of n modes: the 2n x 2n identity."""
    if n < 1:
        raise DimensionError(f"mode count must be >= 1, got {n}")
    return CovarianceMatrix(np.eye(2 * n))


def two_mode_squeezer(r: float, i: int, j: int, n: int) -> SymplecticTransform:
    """Two-mode squeezing S_{i,j}(r) embedded in an n-mode transform.

    On the (q_i, p_i, q_j, p_j) block the matrix is
    [[ch, 0, sh, 0], [0, ch, 0, -sh], [sh, 0, ch, 0], [0, -sh, 0, ch]]
    with ch = cosh(r), sh = sinh(r); identity elsewhere.
    """
    if i == j:
        raise DimensionError("two-mode squeezer needs two distinct modes")
    for m in (i, j):
        if not 0 <= m < n:
            raise DimensionError(f"mode index {m} out of range for {n} modes")
    ch, sh = np.cosh(r), np.sinh(r)
    s = np.eye(2 * n)
    qi, pi, qj, pj = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
    s[qi, qi] = s[pi, pi] = s[qj, qj] = s[pj, pj] = ch
    s[qi, qj] = s[qj, qi] = sh
    s[pi, pj] = s[pj, pi] = -sh
    return SymplecticTransform(s)


def rotation(theta: float) -> np.ndarray:
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def local_symplectic(theta1: float, z: float, theta2: float, mode: int, n: int) -> SymplecticTransform:
    """Single-mode symplectic R(theta1) diag(e^z, e^-z) R(theta2) embedded on `mode`."""
    if not 0 <= mode < n:
        raise DimensionError(f"mode index {mode} out of range for {n} modes")
    block = rotation(theta1) @ np.diag([np.exp(z), np.exp(-z)]) @ rotation(theta2)
    s = np.eye(2 * n)
    s[2 * mode:2 * mode + 2, 2 * mode:2 * mode + 2] = block
    return SymplecticTransform(s)


def apply_symplectic(sigma: CovarianceMatrix, s: SymplecticTransform) -> CovarianceMatrix:
    """Congruence action sigma -> S sigma S^T of a Gaussian unitary."""
    if sigma.modes != s.modes:
        raise DimensionError(
            f"dimension mismatch: {sigma.modes}-mode state, {s.modes}-mode transform")
    return CovarianceMatrix(s.matrix @ sigma.matrix @ s.matrix.T)


def direct_sum(a: CovarianceMatrix, b: CovarianceMatrix) -> CovarianceMatrix:
    """Covariance matrix of the product state, block-diagonal on N_a + N_b modes."""
    na, nb = 2 * a.modes, 2 * b.modes
    out = np.zeros((na + nb, na + nb))
    out[:na, :na] = a.matrix
    out[na:, na:] = b.matrix
    return CovarianceMatrix(out)


def partial_trace(sigma: CovarianceMatrix, keep: Sequence[int] | ModePartition) -> CovarianceMatrix:
    """Reduce to the principal submatrix on the kept modes (in the given order)."""
    modes = keep.all_modes() if isinstance(keep, ModePartition) else tuple(keep)
    if len(modes) == 0:
        raise DimensionError("must keep at least one mode")
    for m in modes:
        if not 0 <= m < sigma.modes:
            raise DimensionError(f"mode index {m} out of range for {sigma.modes} modes")
    idx = _quad_indices(modes)
    return CovarianceMatrix(sigma.matrix[np.ix_(idx, idx)])


def symplectic_eigenvalues(sigma: CovarianceMatrix) -> np.ndarray:
    """Symplectic spectrum: the N distinct moduli of the eigenvalues of i Omega sigma.

    Returned sorted in descending order.  All >= 1 for physical states.
    """
    omega = symplectic_form(sigma.modes)
    ev = np.linalg.eigvals(1j * omega @ sigma.matrix)
    mods = np.sort(np.abs(ev))[::-1]
    # eigenvalues come in +/- pairs; keep one representative of each
    return mods[::2].copy()


def is_bona_fide(sigma: CovarianceMatrix) -> bool:
    """True iff sigma + i Omega >= 0, i.e. the smallest symplectic eigenvalue >= 1."""
    return bool(np.min(symplectic_eigenvalues(sigma)) >= 1.0 - BONA_FIDE_TOL)


def require_bona_fide(sigma: CovarianceMatrix):
    if not is_bona_fide(sigma):
        raise NotBonaFideError("covariance matrix violates the uncertainty principle")


def cm_to_json_dict(sigma: CovarianceMatrix) -> dict:
    """Serialize to {"modes": N, "entries": row-major flat list}."""
    return {"modes": sigma.modes, "entries": [float(x) for x in sigma.matrix.ravel()]}


def cm_from_json_dict(data: Mapping) -> CovarianceMatrix:
    n = int(data["modes"])
    entries = np.asarray(data["entries"], dtype=float)
    if entries.size != 4 * n * n:
        raise DimensionError(f"expected {4 * n * n} entries for {n} modes, got {entries.size}")
    return CovarianceMatrix(entries.reshape(2 * n, 2 * n))
