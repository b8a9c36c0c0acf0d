"""Minkowski-frame two-mode states and their Rindler-frame extensions.

Scenario conventions: setting "a" has an inertial Alice and an accelerated
Rob; the 3-mode state is ordered (A, R, Rbar).  Setting "b" accelerates both
observers; the 4-mode state is ordered (A, R, Abar, Rbar) with the squeezers
acting on the pairs (A, Abar) and (R, Rbar).  Observed modes A, R always sit
at indices 0 and 1, so tracing down to physical observers never reorders.
The right/left Unruh-mode mixing is fixed at q_R = 1, q_L = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .phase_space import (
    CovarianceMatrix,
    apply_symplectic,
    direct_sum,
    partial_trace,
    two_mode_squeezer,
    vacuum_cm,
)

SETTINGS = ("inertial", "a", "b")

MODE_LABELS = {
    "inertial": ("A", "R"),
    "a": ("A", "R", "Rbar"),
    "b": ("A", "R", "Abar", "Rbar"),
}


@dataclass(frozen=True)
class UnruhParameters:
    """Physical inputs for the acceleration parameter, in natural units.

    Either the proper acceleration or the Unruh temperature may be given;
    when both are present they must satisfy T = a / (2 pi).
    """

    mode_frequency: float
    proper_acceleration: float | None = None
    temperature: float | None = None

    def __post_init__(self):
        if self.mode_frequency <= 0:
            raise ValueError(f"mode frequency must be > 0, got {self.mode_frequency}")
        if self.proper_acceleration is None and self.temperature is None:
            raise ValueError("need a proper acceleration or a temperature")
        for name, v in (("proper_acceleration", self.proper_acceleration),
                        ("temperature", self.temperature)):
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be > 0, got {v}")
        if self.proper_acceleration is not None and self.temperature is not None:
            implied = self.proper_acceleration / (2.0 * np.pi)
            if not np.isclose(self.temperature, implied, rtol=1e-12):
                raise ValueError(
                    f"inconsistent inputs: T = {self.temperature}, a/(2 pi) = {implied}")


def acceleration_parameter(params: UnruhParameters, given: str = "temperature") -> float:
    """Acceleration parameter r from cosh^-2 r = 1 - exp(-omega / T).

    `given` selects which field drives the result: "temperature" uses T
    directly, "acceleration" derives T = a / (2 pi) first.
    """
    if given == "acceleration":
        if params.proper_acceleration is None:
            raise ValueError("no proper acceleration supplied")
        temp = params.proper_acceleration / (2.0 * np.pi)
    elif given == "temperature":
        if params.temperature is None:
            raise ValueError("no temperature supplied")
        temp = params.temperature
    else:
        raise ValueError(f"given must be 'acceleration' or 'temperature', got {given!r}")
    x = params.mode_frequency / temp
    # cosh r = (1 - e^-x)^(-1/2); for large x this saturates at r = 0
    coshr = 1.0 / np.sqrt(-np.expm1(-x))
    return float(np.arccosh(max(coshr, 1.0)))


def _check_nonnegative(**kwargs: float):
    for name, v in kwargs.items():
        if not np.isfinite(v) or v < 0:
            raise ValueError(f"{name} must be finite and >= 0, got {v}")


def inertial_pair(s: float) -> CovarianceMatrix:
    """Two-mode squeezed state of modes (A, R) with squeezing s."""
    _check_nonnegative(s=s)
    return apply_symplectic(vacuum_cm(2), two_mode_squeezer(s, 0, 1, 2))


def setting_a(s: float, r: float) -> CovarianceMatrix:
    """Pure 3-mode state (A, R, Rbar): inertial pair plus Rob's Unruh squeezer."""
    _check_nonnegative(s=s, r=r)
    sigma = direct_sum(inertial_pair(s), vacuum_cm(1))
    return apply_symplectic(sigma, two_mode_squeezer(r, 1, 2, 3))


def setting_b(s: float, w: float, r: float) -> CovarianceMatrix:
    """Pure 4-mode state (A, R, Abar, Rbar): Unruh squeezers on both observers."""
    _check_nonnegative(s=s, w=w, r=r)
    sigma = direct_sum(inertial_pair(s), vacuum_cm(2))
    sigma = apply_symplectic(sigma, two_mode_squeezer(w, 0, 2, 4))
    return apply_symplectic(sigma, two_mode_squeezer(r, 1, 3, 4))


@dataclass(frozen=True)
class FrameScenario:
    """Which observers accelerate, and with what parameters."""

    setting: str
    s: float
    r: float = 0.0
    w: float = 0.0

    def __post_init__(self):
        if self.setting not in SETTINGS:
            raise ValueError(f"setting must be one of {SETTINGS}, got {self.setting!r}")
        _check_nonnegative(s=self.s, r=self.r, w=self.w)
        if self.setting == "a" and self.w != 0.0:
            object.__setattr__(self, "w", 0.0)

    @property
    def labels(self) -> tuple[str, ...]:
        return MODE_LABELS[self.setting]

    def global_cm(self) -> CovarianceMatrix:
        if self.setting == "inertial":
            return inertial_pair(self.s)
        if self.setting == "a":
            return setting_a(self.s, self.r)
        return setting_b(self.s, self.w, self.r)

    def to_json_dict(self) -> dict:
        return {"setting": self.setting, "s": self.s, "r": self.r, "w": self.w}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FrameScenario":
        if "setting" not in data or "s" not in data:
            raise ValueError("scenario needs at least 'setting' and 's'")
        return cls(setting=str(data["setting"]), s=float(data["s"]),
                   r=float(data.get("r", 0.0)), w=float(data.get("w", 0.0)))


def observed_pair(scenario: FrameScenario) -> CovarianceMatrix:
    """Reduction of the scenario's global state onto the observed modes A and R."""
    sigma = scenario.global_cm()
    if sigma.modes == 2:
        return sigma
    return partial_trace(sigma, (0, 1))
