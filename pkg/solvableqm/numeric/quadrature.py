"""
Adaptive composite Gauss-Legendre quadrature on mapped intervals, and the
orthogonality checks built on it.
"""

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from solvableqm.darboux import DeformedSystem, norm_ratio
from solvableqm.errors import AccuracyError, InvariantViolation
from solvableqm.models import ModelSystem, norm_closed_form
from solvableqm.multi_indexed import MultiIndexedSystem, orthogonality_factors

from .grid import GridSpec
from .special import norm_value
from .tolerances import MULTI_ORTHOGONALITY, NORM_RATIO, ORTHOGONALITY

GAUSS_ORDER = 24
INITIAL_PANELS = 16
MAX_DEPTH = 30

# beyond this |x| every weight used here has underflowed
X_CUTOFF = 60.0


@dataclass(frozen=True)
class QuadratureResult:
    """
    An integral with its accumulated error estimate
    """

    value: float
    error_estimate: float

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("Negative error estimate")


def _panel(func: Callable, lo: float, hi: float) -> float:
    value, _ = integrate.fixed_quad(func, lo, hi, n=GAUSS_ORDER)
    return float(value)


def adaptive_gauss_legendre(
    func: Callable,
    a: float,
    b: float,
    abs_tol: float = 1e-13,
    rel_tol: float = 1e-12,
) -> QuadratureResult:
    """
    Bisects panels until the one-panel and two-panel rules agree to a
    share of the tolerance proportional to the panel width.  The relative
    tolerance refers to the summed magnitude of the initial panels, which
    stays meaningful for integrals that cancel to zero.  Accepted panels
    are summed with fsum, so the result does not depend on the order they
    were accepted in.
    """
    edges = np.linspace(a, b, INITIAL_PANELS + 1)
    stack = [
        (lo, hi, _panel(func, lo, hi), 0) for lo, hi in zip(edges, edges[1:])
    ]
    scale = math.fsum(abs(entry[2]) for entry in stack)
    budget = max(abs_tol, rel_tol * scale)
    values: List[float] = []
    errors: List[float] = []

    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left, right = _panel(func, lo, mid), _panel(func, mid, hi)
        error = abs(left + right - whole)
        allowed = budget * (hi - lo) / (b - a)

        if error <= allowed:
            values.append(left + right)
            errors.append(error)
        elif depth >= MAX_DEPTH:
            raise AccuracyError(
                f"Quadrature did not converge on [{lo}, {hi}]", error
            )
        else:
            stack.append((lo, mid, left, depth + 1))
            stack.append((mid, hi, right, depth + 1))

    return QuadratureResult(math.fsum(values), math.fsum(errors))


def mapped_integral(
    integrand: Callable, grid: GridSpec, **tolerances
) -> QuadratureResult:
    """
    The integral of integrand(x) over the grid's interval, carried out in
    the mapping parameter u.
    """
    lo, hi = grid.u_range()

    def in_u(u):
        x = grid.x_of_u(u)
        inside = np.abs(x) <= X_CUTOFF
        with np.errstate(all="ignore"):
            values = integrand(np.where(inside, x, 0.0)) * grid.jacobian(u)
        return np.where(inside, values, 0.0)

    return adaptive_gauss_legendre(in_u, lo, hi, **tolerances)


def quadrature_inner_product(
    system, n: int, m: int, grid: Optional[GridSpec] = None
) -> QuadratureResult:
    """
    (phi_n, phi_m) in x for a base, deformed or multi-indexed system.
    """
    grid = grid or GridSpec.for_system(system)
    coord = system.coord
    phi_n = system.eigenfunction(n)
    phi_m = phi_n if m == n else system.eigenfunction(m)

    def integrand(x):
        eta = coord.eta_of_x(x)
        return phi_n.evaluate(eta) * phi_m.evaluate(eta)

    return mapped_integral(integrand, grid)


@dataclass
class OrthogonalityReport:
    """
    The quadrature Gram matrix against the expected diagonal.
    """

    levels: Tuple[int, ...]
    gram: Dict[Tuple[int, int], QuadratureResult]
    expected: Dict[int, float]
    worst: float = 0.0


def _gram(
    system,
    levels: Sequence[int],
    expected: Dict[int, float],
    tolerance: float,
    name: str,
    grid: Optional[GridSpec] = None,
) -> OrthogonalityReport:
    report = OrthogonalityReport(tuple(levels), {}, expected)
    for i, n in enumerate(levels):
        for m in levels[i:]:
            result = quadrature_inner_product(system, n, m, grid)
            report.gram[(n, m)] = result
            if n == m:
                deviation = abs(result.value / expected[n] - 1)
            else:
                scale = max(abs(expected[n]), abs(expected[m]))
                deviation = abs(result.value) / scale
            report.worst = max(report.worst, deviation)
            if deviation > tolerance:
                raise InvariantViolation(
                    name, residual=deviation, detail=f"entry ({n}, {m})"
                )
    return report


def orthogonality_check(
    model: ModelSystem, n_max: int = 5, grid: Optional[GridSpec] = None
) -> OrthogonalityReport:
    """
    (phi_n, phi_m) = h_n delta_nm against the closed form norms
    """
    levels = list(range(n_max + 1))
    expected = {n: norm_value(norm_closed_form(model, n)) for n in levels}
    return _gram(
        model, levels, expected, ORTHOGONALITY, "orthogonality", grid
    )


def krein_adler_norm_check(
    system: DeformedSystem, n_max: int = 3, grid: Optional[GridSpec] = None
) -> OrthogonalityReport:
    """
    Deformed norms are h_n prod_j (E(n) - E(d_j)).
    """
    levels = system.levels(n_max)
    expected = {
        n: norm_value(norm_closed_form(system.base, n))
        * float(norm_ratio(system, n))
        for n in levels
    }
    return _gram(
        system, levels, expected, NORM_RATIO, "krein-adler-norm", grid
    )


def multi_orthogonality_check(
    system: MultiIndexedSystem,
    n_max: int = 3,
    grid: Optional[GridSpec] = None,
) -> OrthogonalityReport:
    """
    P_D,n are orthogonal against W(lambda^[M,N]) / Xi_D^2 with norms
    h_n(lambda) times the multi-index factors.
    """
    levels = list(range(n_max + 1))
    expected = {
        n: norm_value(norm_closed_form(system.base, n))
        * float(orthogonality_factors(system.base, system.index_set, n))
        for n in levels
    }
    return _gram(
        system,
        levels,
        expected,
        MULTI_ORTHOGONALITY,
        "multi-orthogonality",
        grid,
    )
