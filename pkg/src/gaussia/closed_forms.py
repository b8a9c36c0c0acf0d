"""Analytic closed forms for the correlation measures of the accelerated-observer states.

These are the reference expressions the numeric pipeline is validated
against.  Everything is evaluated in the log domain (log-cosh / log-sinh
building blocks combined with logaddexp) so the large-parameter limits,
probed up to s = r = 25 and beyond, neither overflow nor cancel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .unruh import FrameScenario

LN2 = float(np.log(2.0))
LN3 = float(np.log(3.0))


def _require_nonnegative(**kwargs: float):
    for name, v in kwargs.items():
        if not np.isfinite(v) or v < 0:
            raise ValueError(f"{name} must be finite and >= 0, got {v}")


def _lcosh(x: float) -> float:
    """ln cosh x, safe for large |x|."""
    ax = abs(x)
    return ax - LN2 + np.log1p(np.exp(-2.0 * ax))


def _lsinh(x: float) -> float:
    """ln sinh x for x >= 0 (-inf at 0), safe for large x."""
    if x == 0.0:
        return -np.inf
    return x - LN2 + np.log1p(-np.exp(-2.0 * x))


def _logsub(a: float, b: float) -> float:
    """ln(e^a - e^b) for a >= b."""
    if b == -np.inf:
        return a
    d = b - a
    if d >= 0.0:
        if d < 1e-12:
            return -np.inf
        raise ValueError("log-difference of a negative quantity")
    return a + np.log1p(-np.exp(d))


def c2_inertial(s: float) -> float:
    """Inertial quantum = classical correlations, ln cosh 2s."""
    _require_nonnegative(s=s)
    return _lcosh(2.0 * s)


def _log_marginal_r(s: float, r: float) -> float:
    """ln(cosh^2 r cosh 2s + sinh^2 r), the log of Rob's marginal scale."""
    return np.logaddexp(2.0 * _lcosh(r) + _lcosh(2.0 * s), 2.0 * _lsinh(r))


def i2_closed(s: float, w: float, r: float) -> float:
    """Mutual information between the observed modes; w = 0 recovers setting (a)."""
    _require_nonnegative(s=s, w=w, r=r)
    num_a = _log_marginal_r(s, r)
    num_b = np.logaddexp(_lcosh(2.0 * s) + 2.0 * _lcosh(w), 2.0 * _lsinh(w))
    den = _logsub(_lcosh(2.0 * r) + 2.0 * _lcosh(s) + _lcosh(2.0 * w),
                  2.0 * _lsinh(s))
    return num_a + num_b - den


def j2_A_given_R(s: float) -> float:
    """Classical correlations with measurements on R: ln cosh 2s, r-independent."""
    _require_nonnegative(s=s)
    return _lcosh(2.0 * s)


def j2_R_given_A(s: float, r: float) -> float:
    """Classical correlations with measurements on A: sech 2r times Rob's marginal."""
    _require_nonnegative(s=s, r=r)
    return _log_marginal_r(s, r) - _lcosh(2.0 * r)


def d2_limit_R_given_A(s: float) -> float:
    """Infinite-acceleration limit of the discord seen by Alice: ln(cosh 2s / cosh^2 s)."""
    _require_nonnegative(s=s)
    return _lcosh(2.0 * s) - 2.0 * _lcosh(s)


def _e2_setting_a_parts(s: float, r: float) -> tuple[float, float]:
    """Logs of numerator and denominator of the setting-(a) entanglement formula."""
    num = np.logaddexp(
        np.logaddexp(_lcosh(2.0 * r) + _lcosh(2.0 * s), LN3 + _lcosh(2.0 * s)),
        LN2 + 2.0 * _lsinh(r))
    den = np.logaddexp(
        np.logaddexp(LN2 + 2.0 * _lsinh(r) + _lcosh(2.0 * s), _lcosh(2.0 * r)),
        LN3)
    return num, den


def sudden_death(s: float, w: float, r: float) -> bool:
    """True on the separable region tanh s <= sinh w sinh r."""
    _require_nonnegative(s=s, w=w, r=r)
    if w == 0.0 or r == 0.0:
        return s == 0.0
    return np.log(np.tanh(s)) <= _lsinh(w) + _lsinh(r) if s > 0 else True


def e2_closed(s: float, w: float, r: float) -> float:
    """Renyi-2 entanglement between the observed modes; 0 past sudden death."""
    _require_nonnegative(s=s, w=w, r=r)
    if w == 0.0:
        num, den = _e2_setting_a_parts(s, r)
        return num - den
    if sudden_death(s, w, r):
        return 0.0
    pos_num = np.logaddexp(
        LN2 + _lcosh(2.0 * w) + _lcosh(2.0 * r) + 2.0 * _lcosh(s),
        LN3 + _lcosh(2.0 * s))
    neg_num = np.logaddexp(
        2.0 * LN2 + _lsinh(w) + _lsinh(r) + _lsinh(2.0 * s), 0.0)
    num = _logsub(pos_num, neg_num)
    pos_den = LN2 + np.logaddexp(
        LN2 + _lsinh(w) + _lsinh(r) + _lsinh(2.0 * s),
        2.0 * _lcosh(s) + np.logaddexp(_lcosh(2.0 * w), _lcosh(2.0 * r)))
    neg_den = 2.0 * LN2 + 2.0 * _lsinh(s)
    den = _logsub(pos_den, neg_den)
    return max(num - den, 0.0)


def q2_tripartite_closed(s: float, r: float) -> float:
    """Genuine tripartite nonclassical correlations of the setting-(a) state."""
    _require_nonnegative(s=s, r=r)
    if r == 0.0:
        return 0.0
    e2_num, e2_den = _e2_setting_a_parts(s, r)
    return _log_marginal_r(s, r) + e2_den - _lcosh(2.0 * r) - e2_num


@dataclass(frozen=True)
class ClosedFormReport:
    """All paper closed forms evaluated for one scenario (values in nats)."""

    scenario: FrameScenario
    c2_inertial: float
    i2: float
    j2_A_given_R: float
    j2_R_given_A: float
    e2: float
    q2_tripartite: float | None

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario.to_json_dict(),
            "c2_inertial": self.c2_inertial,
            "i2": self.i2,
            "j2_A_given_R": self.j2_A_given_R,
            "j2_R_given_A": self.j2_R_given_A,
            "e2": self.e2,
            "q2_tripartite": self.q2_tripartite,
        }


def closed_form_report(scenario: FrameScenario) -> ClosedFormReport:
    s, w, r = scenario.s, scenario.w, scenario.r
    if scenario.setting == "inertial":
        w = r = 0.0
    q2 = q2_tripartite_closed(s, r) if scenario.setting != "b" else None
    return ClosedFormReport(
        scenario=scenario,
        c2_inertial=c2_inertial(s),
        i2=i2_closed(s, w, r),
        j2_A_given_R=j2_A_given_R(s),
        j2_R_given_A=j2_R_given_A(s, r),
        e2=e2_closed(s, w, r),
        q2_tripartite=q2,
    )
