"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

The backend is fixed at import time from the ``GAUSSIA_BACKEND`` environment
variable: ``numba`` (require numba, error if missing), ``numpy`` (force the
fallback), or ``auto`` (default: numba when importable).  Both paths compute
identical quantities; ``benchmarks/compare_backends.py`` times them against
each other.
"""

from __future__ import annotations

import os

import numpy as np

_REQUESTED = os.environ.get("GAUSSIA_BACKEND", "auto").lower()
if _REQUESTED not in ("auto", "numba", "numpy"):
    raise ValueError(f"GAUSSIA_BACKEND must be auto|numba|numpy, got {_REQUESTED!r}")

_NUMBA = False
if _REQUESTED in ("auto", "numba"):
    try:
        from numba import njit
        _NUMBA = True
    except ImportError:
        if _REQUESTED == "numba":
            raise


def backend_name() -> str:
    return "numba" if _NUMBA else "numpy"


# ---------------------------------------------------------------------------
# seed-grid objective for one-way classical correlations
#
# For each pure measurement seed (theta, z) with 2x2 seed CM
# Gamma = R(theta) diag(t, 1/t) R(theta)^T, t = e^{2z}, return the
# log-determinant of the conditional CM of the unmeasured mode, via the Schur
# determinant identity
#   det(sigma + 0 (+) Gamma) = det(sigma_m + Gamma) det(conditional).
# Rotating theta into the state, sp = (I (+) R^T) sigma (I (+) R), turns both
# determinants into multilinear expansions in t and 1/t whose coefficients
# are principal minors of a positive definite matrix.  All terms are positive
# so the evaluation stays accurate at arbitrarily large squeezing.  `sigma`
# is 4x4 with the measured mode last.  Minimizing the output maximizes J2.
# ---------------------------------------------------------------------------

def _cond_logdet_grid_numpy(sigma: np.ndarray, thetas: np.ndarray,
                            zs: np.ndarray) -> np.ndarray:
    n = thetas.shape[0]
    ct, st = np.cos(thetas), np.sin(thetas)
    rot = np.zeros((n, 4, 4))
    rot[:, 0, 0] = rot[:, 1, 1] = 1.0
    rot[:, 2, 2] = rot[:, 3, 3] = ct
    rot[:, 2, 3] = -st
    rot[:, 3, 2] = st
    sp = np.swapaxes(rot, 1, 2) @ sigma @ rot
    t = np.exp(2.0 * zs)
    det4 = np.linalg.det(sp)
    keep_q = np.ix_(range(n), [0, 1, 3], [0, 1, 3])
    keep_p = np.ix_(range(n), [0, 1, 2], [0, 1, 2])
    minor_q = np.linalg.det(sp[keep_q])
    minor_p = np.linalg.det(sp[keep_p])
    minor_u = np.linalg.det(sp[:, :2, :2])
    big = det4 + t * minor_q + minor_p / t + minor_u
    meas = (sp[:, 2, 2] * sp[:, 3, 3] - sp[:, 2, 3] ** 2
            + t * sp[:, 3, 3] + sp[:, 2, 2] / t + 1.0)
    # roundoff at extreme conditioning can push a term nonpositive; such
    # points are reported as +inf so the maximizer never selects them
    out = np.full(n, np.inf)
    ok = (big > 0.0) & (meas > 0.0) & np.isfinite(big) & np.isfinite(meas)
    out[ok] = np.log(big[ok]) - np.log(meas[ok])
    return out


# ---------------------------------------------------------------------------
# penalized convex-roof objective for the Renyi-2 entanglement estimate
#
# params = (t1a, za, t2a, t1b, zb, t2b, rt) parameterize the pure two-mode CM
# gamma = (L_A + L_B) S(rt) S(rt)^T (L_A + L_B)^T  (direct sums), with
# L = R(t1) diag(e^z, e^-z) R(t2).  Returns (ln cosh 2rt, min eig(sigma-gamma)).
# ---------------------------------------------------------------------------

def _e2_terms_numpy(params: np.ndarray, sigma: np.ndarray) -> tuple[float, float]:
    t1a, za, t2a, t1b, zb, t2b, rt = params
    rt = abs(rt)

    def local(t1, z, t2):
        c1, s1 = np.cos(t1), np.sin(t1)
        c2, s2 = np.cos(t2), np.sin(t2)
        ez = np.exp(z)
        r1 = np.array([[c1, -s1], [s1, c1]])
        r2 = np.array([[c2, -s2], [s2, c2]])
        return r1 @ np.diag([ez, 1.0 / ez]) @ r2

    ch, sh = np.cosh(2.0 * rt), np.sinh(2.0 * rt)
    core = np.array([
        [ch, 0.0, sh, 0.0],
        [0.0, ch, 0.0, -sh],
        [sh, 0.0, ch, 0.0],
        [0.0, -sh, 0.0, ch],
    ])
    lab = np.zeros((4, 4))
    lab[:2, :2] = local(t1a, za, t2a)
    lab[2:, 2:] = local(t1b, zb, t2b)
    gamma = lab @ core @ lab.T
    mineig = float(np.linalg.eigvalsh(sigma - gamma)[0])
    return float(np.log(np.cosh(2.0 * rt))), mineig


if _NUMBA:

    @njit(cache=True)
    def _det3_numba(m, i0, i1, i2):  # pragma: no cover - compiled
        return (m[i0, i0] * (m[i1, i1] * m[i2, i2] - m[i1, i2] * m[i2, i1])
                - m[i0, i1] * (m[i1, i0] * m[i2, i2] - m[i1, i2] * m[i2, i0])
                + m[i0, i2] * (m[i1, i0] * m[i2, i1] - m[i1, i1] * m[i2, i0]))

    @njit(cache=True)
    def _cond_logdet_grid_numba(sigma, thetas, zs):  # pragma: no cover - compiled
        n = thetas.shape[0]
        out = np.empty(n)
        rot = np.eye(4)
        for k in range(n):
            ct = np.cos(thetas[k])
            st = np.sin(thetas[k])
            rot[2, 2] = ct
            rot[2, 3] = -st
            rot[3, 2] = st
            rot[3, 3] = ct
            sp = rot.T @ sigma @ rot
            t = np.exp(2.0 * zs[k])
            det4 = np.linalg.det(sp)
            minor_q = _det3_numba(sp, 0, 1, 3)
            minor_p = _det3_numba(sp, 0, 1, 2)
            minor_u = sp[0, 0] * sp[1, 1] - sp[0, 1] * sp[1, 0]
            big = det4 + t * minor_q + minor_p / t + minor_u
            meas = (sp[2, 2] * sp[3, 3] - sp[2, 3] ** 2
                    + t * sp[3, 3] + sp[2, 2] / t + 1.0)
            if big > 0.0 and meas > 0.0 and np.isfinite(big) and np.isfinite(meas):
                out[k] = np.log(big) - np.log(meas)
            else:
                # roundoff at extreme conditioning; never the maximizer's pick
                out[k] = np.inf
        return out

    @njit(cache=True)
    def _local_block_numba(t1, z, t2):  # pragma: no cover - compiled
        c1, s1 = np.cos(t1), np.sin(t1)
        c2, s2 = np.cos(t2), np.sin(t2)
        ez = np.exp(z)
        out = np.empty((2, 2))
        # R(t1) diag(ez, 1/ez) R(t2), written out
        out[0, 0] = c1 * ez * c2 + (-s1) * (1.0 / ez) * s2
        out[0, 1] = c1 * ez * (-s2) + (-s1) * (1.0 / ez) * c2
        out[1, 0] = s1 * ez * c2 + c1 * (1.0 / ez) * s2
        out[1, 1] = s1 * ez * (-s2) + c1 * (1.0 / ez) * c2
        return out

    @njit(cache=True)
    def _e2_terms_numba(params, sigma):  # pragma: no cover - compiled
        rt = abs(params[6])
        lab = np.zeros((4, 4))
        lab[:2, :2] = _local_block_numba(params[0], params[1], params[2])
        lab[2:, 2:] = _local_block_numba(params[3], params[4], params[5])
        ch = np.cosh(2.0 * rt)
        sh = np.sinh(2.0 * rt)
        core = np.zeros((4, 4))
        core[0, 0] = core[1, 1] = core[2, 2] = core[3, 3] = ch
        core[0, 2] = core[2, 0] = sh
        core[1, 3] = core[3, 1] = -sh
        gamma = lab @ core @ lab.T
        diff = sigma - gamma
        mineig = np.linalg.eigvalsh(0.5 * (diff + diff.T))[0]
        return np.log(ch), mineig

    conditional_logdet_grid = _cond_logdet_grid_numba
    e2_terms = _e2_terms_numba
else:
    conditional_logdet_grid = _cond_logdet_grid_numpy
    e2_terms = _e2_terms_numpy
