"""Resonance-pole toolkit: pole terms, Jordan-block evolution, state operators."""

from ._core import (
    BraKind,
    CauchyResult,
    DyadCoefficients,
    GamowComponents,
    HardyFunction,
    HardyPole,
    IdentityReport,
    IntegralResult,
    JordanOperator,
    Normalization,
    PoleEvaluationError,
    PoleTermResult,
    QuadratureSpec,
    ResonanceModel,
    ValidationError,
    background_integral,
    binom_cancellation_ok,
    binom_product_identity,
    cauchy_derivative,
    contour_identity_check,
    direct_integral,
    evolution_matrix,
    evolve_components,
    evolve_coefficients,
    evolve_dyad,
    evolve_state_closed,
    evolve_state_triple_sum,
    expansion_coefficients,
    full_state_operator,
    gamow_components,
    hamiltonian_block,
    hardy_derivative,
    hardy_validate,
    lagrange_sylvester,
    laurent_principal,
    matrix_exp_oracle,
    nilpotency_check,
    pair_with_observable,
    pole_term,
    pole_term_from_expansion,
    reorder_check,
    scattering_probability_evolution,
    smatrix_eval,
    state_operator,
    symbolic_evolution_matches,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
