"""
Multi-indexed Laguerre and Jacobi systems, their structural identities and
the pseudo virtual state / eigenstate duality.
"""

from .duality import DualityReport, complement_set, duality_check, pseudo_poly
from .exceptional import (
    StructuralReport,
    exceptional_constant,
    exceptional_params,
    exceptional_poly,
    exceptional_xi,
    structural_identities,
)
from .system import (
    TYPE_ONE,
    TYPE_TWO,
    IndexSet,
    MultiIndexedPoly,
    MultiIndexedSystem,
    bound_violations,
    check_bounds,
    coincident_entries,
    deformed_shift_operators,
    deformed_tilde_h,
    deleted_params,
    denominator_xi,
    frobenius_exponents,
    fuchs_residual,
    make_multi_indexed,
    multi_poly,
    orthogonality_factors,
    permutation_sign,
    plusdelta_check,
    plusdelta_constant,
    shift_relations_check,
    virtual_energy,
    virtual_poly,
)
