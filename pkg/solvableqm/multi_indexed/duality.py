"""
The equivalence of a pseudo virtual state deformation with a Krein-Adler
deletion at shifted parameters.

For D = {d_1..d_M} and N >= max D, deforming H(lambda) by the pseudo
virtual states d_j gives the same potential, up to the constant
E(-N-1; lambda), as deleting the eigenstates {0..N} minus {N - d_j} from
H(lambda - (N+1) delta).
"""

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from sympy import Poly, Rational

from solvableqm.darboux import (
    SeedKind,
    SeedSpec,
    adler_condition,
    deform_system,
)
from solvableqm.errors import (
    InvariantViolation,
    UnsupportedModelError,
    UsageError,
)
from solvableqm.exact import RatFunc, poly_wronskian, reflect
from solvableqm.models import HALF, ModelId, ModelSystem
from solvableqm.ortho_poly import jacobi, laguerre, twisted_hermite


@dataclass
class DualityReport:
    """
    The outcome of duality_check.  `nonsingular` is the combinatorial
    verdict on the complement set, `first_violation` the first m with
    prod_j (m - e_j) < 0.
    """

    pseudo: Tuple[int, ...]
    top: int
    complement: Tuple[int, ...]
    potential_residual: RatFunc
    wronskian_constant: Rational
    nonsingular: bool
    first_violation: Optional[int] = None
    eigen_constants: Dict[int, Rational] = field(default_factory=dict)


def pseudo_poly(model: ModelSystem, v: int) -> Poly:
    """
    The polynomial part xi_v of the pseudo virtual state v
    """
    g, h = model.g, model.h
    if model.model_id == ModelId.H:
        return twisted_hermite(v)
    if model.model_id == ModelId.L:
        return reflect(laguerre(v, HALF - g))
    if model.model_id == ModelId.J:
        return jacobi(v, HALF - g, HALF - h)
    raise UnsupportedModelError(
        f"The duality is checked for H, L and J, not {model.model_id.value}"
    )


def complement_set(pseudo: Sequence[int], top: int) -> Tuple[int, ...]:
    """
    {0..N} minus {N - d_j}
    """
    removed = {top - d for d in pseudo}
    return tuple(e for e in range(top + 1) if e not in removed)


def duality_check(
    model: ModelSystem,
    pseudo: Sequence[int],
    top: Optional[int] = None,
    n_max: int = 2,
) -> DualityReport:
    """
    Verifies the potential equality, the polynomial Wronskian identity
    W[xi_d1..xi_dM](lambda) ~ W[P_e1..P_eK](lambda - (N+1) delta), and the
    proportionality of the first eigenfunctions of both sides.  None of
    these needs the deformation to be nonsingular.
    """
    pseudo = tuple(pseudo)
    if not pseudo:
        raise UsageError("The duality needs at least one pseudo virtual state")
    if len(set(pseudo)) != len(pseudo) or min(pseudo) < 0:
        raise UsageError(f"Bad pseudo virtual index set {list(pseudo)}")
    top = max(pseudo) if top is None else top
    if top < max(pseudo):
        raise UsageError(f"N={top} is below max D = {max(pseudo)}")

    # raises for models without pseudo virtual states
    pseudo_poly(model, 0)

    dual = deform_system(
        model, [SeedSpec(SeedKind.PSEUDO, d) for d in pseudo], unsafe=True
    )
    shifted = model.shifted(-(top + 1))
    complement = complement_set(pseudo, top)

    if complement:
        adler = deform_system(
            shifted,
            [SeedSpec(SeedKind.EIGEN, e) for e in complement],
            unsafe=True,
            deleted=complement,
        )
        adler_potential = adler.potential()
    else:
        adler = None
        adler_potential = shifted.potential()

    residual = (
        dual.potential() - model.energy_formal(-(top + 1)) - adler_potential
    )
    if not residual.is_zero:
        raise InvariantViolation("duality-potential", residual=residual)

    lhs = poly_wronskian([pseudo_poly(model, d) for d in pseudo])
    if complement:
        rhs = poly_wronskian([shifted.eigen_poly_formal(e) for e in complement])
    else:
        rhs = Poly(1, lhs.gen)
    ratio = RatFunc(lhs, rhs)
    if not ratio.is_constant or ratio.is_zero:
        raise InvariantViolation(
            "duality-wronskian", residual=ratio, detail="not proportional"
        )

    first_violation = adler_condition(complement)
    report = DualityReport(
        pseudo=pseudo,
        top=top,
        complement=complement,
        potential_residual=residual,
        wronskian_constant=ratio.constant_value(),
        nonsingular=first_violation is None,
        first_violation=first_violation,
    )

    for n in range(n_max + 1):
        ours = dual.eigenfunction(n)
        theirs = (
            adler.eigenfunction(top + 1 + n)
            if adler is not None
            else shifted.eigenfunction(top + 1 + n)
        )
        c = ours.proportionality(theirs)
        if c is None or c == 0:
            raise InvariantViolation(
                "duality-eigenfunction", detail=f"level {n} not proportional"
            )
        report.eigen_constants[n] = c

    return report
