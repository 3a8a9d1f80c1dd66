"""
The floating-point verification layer.
"""

from .grid import GridMapping, GridSpec
from .quadrature import (
    OrthogonalityReport,
    QuadratureResult,
    adaptive_gauss_legendre,
    krein_adler_norm_check,
    mapped_integral,
    multi_orthogonality_check,
    orthogonality_check,
    quadrature_inner_product,
)
from .sampling import (
    Sample,
    count_sign_changes,
    fd_convergence_ratio,
    fd_schrodinger_residual,
    function_sampler,
    ratfunc_sampler,
    sample_potential,
    sample_wavefunction,
    system_residual,
)
from .special import (
    log_gamma_complex,
    norm_value,
    pole_distance,
    recurrence_residual,
    reflection_residual,
)
