"""
Scattering amplitudes of shape invariant potentials and their multi-indexed
deformations, reflectionless potentials and KdV solitons.
"""

from .amplitudes import (
    IK,
    AffineForm,
    AmplitudeExpr,
    AsymptoticExponents,
    DeformationFactor,
    PoleScan,
    Side,
    amplitude_symmetry_check,
    deform_amplitudes,
    deformation_identity_check,
    evaluate_amplitude,
    pole_scan,
    shape_constraint_check,
    soliton_amplitudes,
    soliton_asymptotic_exponents,
    unit_modulus_residual,
    unitarity_residual,
)
from .expsum import ExpRatio, ExpSum, expsum_det, expsum_wronskian
from .reflectionless import (
    EquivalenceReport,
    KayMoses,
    KdvResult,
    PositivityReport,
    ReflectionlessSpec,
    kay_moses,
    kdv_evolve,
    kdv_residual,
    plane_wave_factors,
    positivity_check,
    reflectionless_amplitudes,
    seed_coefficients,
    single_soliton_check,
    special_soliton,
    special_soliton_check,
    wronskian_equivalence,
)
