"""Gaussian phase-space toolkit for Renyi-2 correlations in noninertial frames."""

from ._kernels import backend_name
from .closed_forms import (
    ClosedFormReport,
    c2_inertial,
    closed_form_report,
    d2_limit_R_given_A,
    e2_closed,
    i2_closed,
    j2_A_given_R,
    j2_R_given_A,
    q2_tripartite_closed,
    sudden_death,
)
from .measurement import (
    MeasurementOptimum,
    MeasurementSeed,
    classical_correlations,
    conditional_cm,
    discord,
)
from .phase_space import (
    CovarianceMatrix,
    DimensionError,
    ModePartition,
    NotBonaFideError,
    PhaseSpaceError,
    SymplecticTransform,
    apply_symplectic,
    cm_from_json_dict,
    cm_to_json_dict,
    direct_sum,
    is_bona_fide,
    local_symplectic,
    partial_trace,
    symplectic_eigenvalues,
    symplectic_form,
    two_mode_squeezer,
    vacuum_cm,
)
from .renyi import (
    CorrelationValue,
    EntanglementSearchError,
    MixedStateError,
    entanglement_estimate,
    mutual_information,
    pure_state_entanglement,
    renyi2_entropy,
    wigner_shannon_entropy,
)
from .tripartite import (
    TripartiteReport,
    minimize_over_hub,
    residual_discord,
    residual_entanglement,
    tripartite_report,
)
from .unruh import (
    FrameScenario,
    UnruhParameters,
    acceleration_parameter,
    inertial_pair,
    observed_pair,
    setting_a,
    setting_b,
)

__version__ = "0.1.0"
