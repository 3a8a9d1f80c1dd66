"""
The exact substrate: polynomials and rational functions over QQ,
prefactored functions, differential operators, Wronskians and Sturm root
counting.
"""

from .diffop import DiffOp, compose, diffop_commutator, polynomial_of
from .poly import (
    ETA,
    K,
    VARIABLES,
    X,
    Y,
    RatFunc,
    as_poly,
    coeffs_ascending,
    poly_from_coeffs,
    poly_to_float,
    primitive_part,
    reflect,
)
from .prefactored import (
    FACTORS,
    PrefactoredFunction,
    exponential,
    factor_basis_product,
)
from .roots import real_root_count
from .wronskian import poly_det, poly_wronskian, prefactored_wronskian
