"""Residual (monogamy) tripartite correlations on pure three-mode states.

For a pure state, the 1-vs-2 discord and entanglement of a hub mode both
equal the hub's marginal entropy, so each residual is that entropy minus the
two 1-vs-1 terms: discords from the measurement optimizer, entanglement from
the convex-roof estimator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .measurement import discord
from .phase_space import CovarianceMatrix, DimensionError, ModePartition, partial_trace
from .renyi import MixedStateError, PURITY_TOL, entanglement_estimate, renyi2_entropy

DEFAULT_LABELS = ("A", "R", "Rbar")
HUB_TIE_TOL = 1e-9


def _check_pure_three_mode(sigma3: CovarianceMatrix):
    if sigma3.modes != 3:
        raise DimensionError(f"need a 3-mode state, got {sigma3.modes} modes")
    if not sigma3.is_pure(PURITY_TOL):
        raise MixedStateError(f"pure state required, det sigma = {sigma3.det():.6g}")


def _hub_index(hub: str, labels: tuple[str, ...]) -> int:
    if hub not in labels:
        raise ValueError(f"hub {hub!r} not among mode labels {labels}")
    return labels.index(hub)


def residual_discord(sigma3: CovarianceMatrix, hub: str = "R",
                     labels: tuple[str, ...] = DEFAULT_LABELS) -> float:
    """S2(hub) - D2(hub|X) - D2(hub|Y), measurements on the non-hub modes."""
    _check_pure_three_mode(sigma3)
    h = _hub_index(hub, labels)
    others = [k for k in range(3) if k != h]
    total = renyi2_entropy(partial_trace(sigma3, (h,))).value
    for k in others:
        pair = partial_trace(sigma3, (h, k))
        part = ModePartition({labels[h]: (0,), labels[k]: (1,)})
        total -= discord(pair, part, measured=labels[k]).value
    return total


def residual_entanglement(sigma3: CovarianceMatrix, hub: str = "R",
                          labels: tuple[str, ...] = DEFAULT_LABELS,
                          budget: int = 20000) -> float:
    """S2(hub) - E2(hub:X) - E2(hub:Y), the 1-vs-1 terms from the estimator."""
    _check_pure_three_mode(sigma3)
    h = _hub_index(hub, labels)
    others = [k for k in range(3) if k != h]
    total = renyi2_entropy(partial_trace(sigma3, (h,))).value
    for k in others:
        pair = partial_trace(sigma3, (h, k))
        part = ModePartition({labels[h]: (0,), labels[k]: (1,)})
        total -= entanglement_estimate(pair, part, budget=budget).value
    return total


@dataclass(frozen=True)
class TripartiteReport:
    """All terms of the residual decomposition around one hub mode (in nats)."""

    hub: str
    e2_hub_vs_rest: float
    e2_hub_first: float
    e2_hub_second: float
    d2_hub_given_rest: float
    d2_hub_given_first: float
    d2_hub_given_second: float
    residual_entanglement: float
    residual_discord: float

    def to_json_dict(self) -> dict:
        return {
            "hub": self.hub,
            "E2_hub_vs_rest": self.e2_hub_vs_rest,
            "E2_hub_first": self.e2_hub_first,
            "E2_hub_second": self.e2_hub_second,
            "D2_hub_given_rest": self.d2_hub_given_rest,
            "D2_hub_given_first": self.d2_hub_given_first,
            "D2_hub_given_second": self.d2_hub_given_second,
            "residual_entanglement": self.residual_entanglement,
            "residual_discord": self.residual_discord,
        }


def tripartite_report(sigma3: CovarianceMatrix, hub: str = "R",
                      labels: tuple[str, ...] = DEFAULT_LABELS,
                      budget: int = 20000) -> TripartiteReport:
    """Evaluate every 1-vs-2 and 1-vs-1 term around the hub, plus both residuals."""
    _check_pure_three_mode(sigma3)
    h = _hub_index(hub, labels)
    others = [k for k in range(3) if k != h]
    s2_hub = renyi2_entropy(partial_trace(sigma3, (h,))).value

    e2_pairs = []
    d2_pairs = []
    for k in others:
        pair = partial_trace(sigma3, (h, k))
        part = ModePartition({labels[h]: (0,), labels[k]: (1,)})
        e2_pairs.append(entanglement_estimate(pair, part, budget=budget).value)
        d2_pairs.append(discord(pair, part, measured=labels[k]).value)

    return TripartiteReport(
        hub=hub,
        e2_hub_vs_rest=s2_hub,
        e2_hub_first=e2_pairs[0],
        e2_hub_second=e2_pairs[1],
        d2_hub_given_rest=s2_hub,
        d2_hub_given_first=d2_pairs[0],
        d2_hub_given_second=d2_pairs[1],
        residual_entanglement=s2_hub - e2_pairs[0] - e2_pairs[1],
        residual_discord=s2_hub - d2_pairs[0] - d2_pairs[1],
    )


def minimize_over_hub(sigma3: CovarianceMatrix, quantity: str = "discord",
                      labels: tuple[str, ...] = DEFAULT_LABELS,
                      budget: int = 20000) -> tuple[str, float]:
    """Residual minimized over the three hub choices; ties go to mode order."""
    if quantity not in ("entanglement", "discord"):
        raise ValueError(f"quantity must be 'entanglement' or 'discord', got {quantity!r}")
    best_hub, best_val = None, np.inf
    for hub in labels:
        if quantity == "discord":
            val = residual_discord(sigma3, hub, labels)
        else:
            val = residual_entanglement(sigma3, hub, labels, budget=budget)
        if val < best_val - HUB_TIE_TOL:
            best_hub, best_val = hub, val
    return best_hub, best_val
