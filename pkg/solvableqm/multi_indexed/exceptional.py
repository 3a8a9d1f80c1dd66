"""
Structural identities of the multi-indexed polynomials: level 0 deletions
and the exceptional X_l polynomials as single virtual state deletions.
"""

from dataclasses import dataclass, field
from typing import Dict, Optional

from sympy import QQ, Poly, Rational

from solvableqm.errors import InvariantViolation, UsageError
from solvableqm.exact import ETA, RatFunc, reflect
from solvableqm.models import HALF, ModelId, ModelSystem
from solvableqm.ortho_poly import jacobi, laguerre

from .system import (
    TILDE_DELTA,
    TYPE_ONE,
    TYPE_TWO,
    IndexSet,
    _build,
    _require_model,
    offset_params,
    plusdelta_check,
)


@dataclass
class StructuralReport:
    """
    The proportionality constants found by structural_identities, keyed by
    identity name and level.
    """

    index_set: IndexSet
    plusdelta: Optional[Rational] = None
    level_zero: Dict[str, Rational] = field(default_factory=dict)
    exceptional: Dict[str, Rational] = field(default_factory=dict)


def _ratio(lhs: Poly, rhs: Poly, name: str) -> Rational:
    ratio = RatFunc(lhs, rhs) if not rhs.is_zero else None
    if ratio is None or not ratio.is_constant:
        raise InvariantViolation(
            name, residual=ratio, detail="sides are not proportional"
        )
    return ratio.constant_value()


def exceptional_params(model: ModelSystem, kind: str, ell: int):
    """
    lambda + l delta + tilde delta
    """
    dg, dh = TILDE_DELTA[kind]
    return offset_params(model, ell + dg, ell + dh)


def exceptional_xi(model: ModelSystem, kind: str, ell: int) -> Poly:
    """
    The X_l denominator xi_l(eta; lambda) in closed form.
    """
    _require_model(model)
    g, h = model.g, model.h
    if model.model_id == ModelId.L:
        if kind == TYPE_ONE:
            return reflect(laguerre(ell, g + ell - Rational(3, 2)))
        return laguerre(ell, -g - ell - HALF)
    if kind == TYPE_ONE:
        return jacobi(ell, g + ell - Rational(3, 2), -h - ell - HALF)
    return jacobi(ell, -g - ell - HALF, h + ell - Rational(3, 2))


def exceptional_constant(model: ModelSystem, kind: str, n: int) -> Rational:
    """
    A in P_l,n(lambda) = A P_D,n(lambda + l delta + tilde delta)
    """
    g, h = model.g, model.h
    if model.model_id == ModelId.L:
        return Rational(-1) if kind == TYPE_ONE else 1 / (n + g + HALF)
    if kind == TYPE_ONE:
        return 2 / (n + h + HALF)
    return -2 / (n + g + HALF)


def exceptional_poly(
    model: ModelSystem, kind: str, ell: int, n: int
) -> Poly:
    """
    The exceptional X_l polynomial P_l,n(eta; lambda) of type I or II, of
    degree l + n, from its two-term form in xi_l and the classical P_n at
    the shifted parameters.
    """
    _require_model(model)
    if kind not in (TYPE_ONE, TYPE_TWO):
        raise UsageError(f"Exceptional type must be I or II, got {kind!r}")
    if ell < 1:
        raise UsageError(f"Exceptional polynomials need l >= 1, got {ell}")

    shifted = model.with_params(exceptional_params(model, kind, ell))
    xi = exceptional_xi(model, kind, ell)
    p = shifted.eigen_poly_formal(n)
    wronskian = xi * p.diff() - xi.diff() * p

    if model.model_id == ModelId.L and kind == TYPE_ONE:
        body = xi * p.diff() - (xi + xi.diff()) * p
    elif model.model_id == ModelId.L:
        eta = Poly(ETA, ETA, domain=QQ)
        body = eta * wronskian + xi * p * (shifted.g - HALF)
    elif kind == TYPE_ONE:
        cos2 = Poly((1 + ETA) / 2, ETA, domain=QQ)
        body = cos2 * wronskian + xi * p * ((shifted.h - HALF) / 2)
    else:
        sin2 = Poly((1 - ETA) / 2, ETA, domain=QQ)
        body = sin2 * wronskian - xi * p * ((shifted.g - HALF) / 2)

    return body * exceptional_constant(model, kind, n)


def _level_zero(
    model: ModelSystem, index_set: IndexSet, kind: str, n: int
) -> Rational:
    """
    P_D,n(lambda) / P_D',n(lambda - tilde delta) for a set with a zero of
    the given type, compared with the product formula.
    """
    m, big_n = index_set.M, index_set.N
    g, h = model.g, model.h
    one = [d for d in index_set.type_one if not (kind == TYPE_ONE and d == 0)]
    two = [d for d in index_set.type_two if not (kind == TYPE_TWO and d == 0)]

    if kind == TYPE_ONE:
        reduced = IndexSet(
            [d - 1 for d in one], [d + 1 for d in two], allow_zero=True
        )
    else:
        reduced = IndexSet(
            [d + 1 for d in one], [d - 1 for d in two], allow_zero=True
        )
    dg, dh = TILDE_DELTA[kind]
    lowered = model.with_params(offset_params(model, -dg, -dh))

    lhs = _build(model, index_set, unsafe=True).poly(n)
    rhs = _build(lowered, reduced, unsafe=True).poly(n)
    found = _ratio(lhs, rhs, f"level-zero-{kind}")

    if model.model_id == ModelId.L:
        if kind == TYPE_ONE:
            expected = Rational((-1) ** m)
            for d in two:
                expected *= d + 1
        else:
            expected = Rational((-1) ** m) * (n + g - HALF)
            for d in one:
                expected *= d + 1
    elif kind == TYPE_ONE:
        expected = -(Rational(-2) ** -m) * (Rational(-2) ** -big_n)
        expected *= n + h - HALF
        for d in one:
            expected *= g - h + d + 1
        for d in two:
            expected *= d + 1
    else:
        expected = Rational(1, 2**m) * (Rational(-2) ** -big_n)
        expected *= n + g - HALF
        for d in one:
            expected *= d + 1
        for d in two:
            expected *= h - g + d + 1

    # the product formula puts the zero entry last among its type; the
    # canonical order puts it first
    size = m if kind == TYPE_ONE else big_n
    expected *= (-1) ** (size - 1)

    if found != expected:
        raise InvariantViolation(
            f"level-zero-{kind}",
            residual=found - expected,
            detail=f"D={index_set}, n={n}",
        )
    return found


def _exceptional(model: ModelSystem, kind: str, ell: int, n: int) -> Rational:
    index_set = IndexSet(*(([ell], []) if kind == TYPE_ONE else ([], [ell])))
    shifted = model.with_params(exceptional_params(model, kind, ell))
    system = _build(shifted, index_set, unsafe=True)

    xi = exceptional_xi(model, kind, ell)
    if system.xi != xi:
        raise InvariantViolation(
            f"exceptional-xi-{kind}", residual=system.xi - xi
        )

    found = _ratio(
        exceptional_poly(model, kind, ell, n),
        system.poly(n),
        f"exceptional-{kind}",
    )
    expected = exceptional_constant(model, kind, n)
    if found != expected:
        raise InvariantViolation(
            f"exceptional-{kind}", residual=found - expected
        )
    return found


def structural_identities(
    model: ModelSystem, index_set: IndexSet, n_max: int = 2
) -> StructuralReport:
    """
    Checks the P_D,0 / Xi_D(lambda + delta) constant of a set without
    zero entries, the level 0 reductions when D has a zero entry, and the
    exceptional specialisation when D is a single entry.
    """
    _require_model(model)
    report = StructuralReport(index_set)
    if 0 not in index_set.type_one + index_set.type_two:
        report.plusdelta = plusdelta_check(
            _build(model, index_set, unsafe=True)
        )

    for kind, values in (
        (TYPE_ONE, index_set.type_one),
        (TYPE_TWO, index_set.type_two),
    ):
        if 0 in values:
            for n in range(n_max + 1):
                report.level_zero[f"{kind}:n={n}"] = _level_zero(
                    model, index_set, kind, n
                )

    entries = index_set.entries()
    if len(entries) == 1 and entries[0][1] >= 1:
        kind, ell = entries[0]
        for n in range(n_max + 1):
            report.exceptional[f"{kind}:l={ell}:n={n}"] = _exceptional(
                model, kind, ell, n
            )

    return report
