"""
The base solvable systems and the identities they satisfy.
"""

from .checks import (
    LadderDirection,
    NormDescriptor,
    NormTag,
    boundary_exponents,
    closure_residual,
    discrete_symmetry_residuals,
    eigen_residual,
    heisenberg_step_check,
    ladder_action,
    ladder_products,
    norm_closed_form,
    potential,
    rodrigues_check,
    shape_invariance_residual,
    shift_energy_residual,
    shift_relation_check,
    soliton_limits_check,
    tilde_h_operator,
)
from .coordinates import (
    HERMITE_MAP,
    HYPERBOLIC_MAP,
    RADIAL_MAP,
    TRIGONOMETRIC_MAP,
    SinusoidalMap,
)
from .system import (
    HALF,
    MODELS,
    ClosureData,
    Harmonic,
    ModelId,
    ModelParams,
    ModelSystem,
    PoschlTeller,
    Radial,
    ShiftData,
    Soliton,
    make_model,
)
