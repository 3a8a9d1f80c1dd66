"""
Exact identity checks on the base systems.

Every check takes a ModelSystem and either returns the residual of the
identity (which is zero for a correct system) or raises InvariantViolation
when the identity cannot even be stated, e.g. when a result that should be
proportional to an eigenpolynomial is not.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from sympy import Poly, Rational, factorial, sqrt

from solvableqm.errors import InvariantViolation, UnsupportedModelError
from solvableqm.exact import (
    ETA,
    DiffOp,
    PrefactoredFunction,
    RatFunc,
    coeffs_ascending,
    diffop_commutator,
    poly_from_coeffs,
    polynomial_of,
    reflect,
)

from .system import HALF, ModelId, ModelParams, ModelSystem, Soliton


class LadderDirection(Enum):
    """
    Which of the annihilation/creation pair to apply
    """

    UP = "up"
    DOWN = "down"


class NormTag(Enum):
    """
    The transcendental part of a closed form norm
    """

    SQRT_PI = "sqrt_pi"
    GAMMA = "gamma_product"


@dataclass(frozen=True)
class NormDescriptor:
    """
    h_n = rational * (sqrt(pi) | prod Gamma(num) / prod Gamma(den)).
    Gamma arguments are kept exact; the numeric layer evaluates them.
    """

    rational: Rational
    tag: NormTag
    gamma_num: Tuple[Rational, ...] = ()
    gamma_den: Tuple[Rational, ...] = ()


def potential(model: ModelSystem) -> RatFunc:
    """
    U(eta) of the base system.
    """
    return model.potential()


def tilde_h_operator(model: ModelSystem) -> DiffOp:
    """
    The similarity transformed Hamiltonian acting on the polynomial parts.
    """
    return model.tilde_h(0)


def eigen_residual(model: ModelSystem, n: int) -> Poly:
    """
    H~_n P_n - E(n) P_n.  For the soliton, H~_n is conjugated by the level
    n prefactor sech^(h-n).
    """
    p = model.eigen_poly(n)
    return model.tilde_h(n).apply_poly(p) - p * model.energy(n)


def shape_invariance_residual(model: ModelSystem) -> RatFunc:
    """
    (w')^2 - w''  -  [(w')^2 + w''](lambda + delta)  -  (E(1) - E(0))
    """
    w1_sq, w2 = model.prepotential_derivatives()
    s1_sq, s2 = model.shifted().prepotential_derivatives()
    gap = model.energy_formal(1) - model.energy_formal(0)
    return (w1_sq - w2) - (s1_sq + s2) - gap


def shift_relation_check(model: ModelSystem, n: int) -> Poly:
    """
    The forward relation cF P_n' = f_n P_(n-1)(lambda + delta) and the
    backward relation B(lambda) P_(n-1)(lambda + delta) = b_(n-1) P_n.

    Returns the first nonzero residual, or the zero polynomial.
    """
    if n < 1:
        raise InvariantViolation(
            "shift-relation", detail=f"needs n >= 1, got {n}"
        )

    data = model.shift_data()
    p_n = model.eigen_poly(n)
    p_prev = model.shifted().eigen_poly_formal(n - 1)

    forward = p_n.diff() * data.cF - p_prev * data.f(n)
    if not forward.is_zero:
        return forward

    scale = -4 / data.cF
    backward_op = DiffOp([RatFunc(data.c1) * scale, RatFunc(data.c2) * scale])
    return backward_op.apply_poly(p_prev) - p_n * data.b(n)


def shift_energy_residual(model: ModelSystem, n: int) -> Rational:
    """
    f_n b_(n-1) - E(n)
    """
    data = model.shift_data()
    return data.f(n) * data.b(n) - model.energy(n)


def closure_residual(model: ModelSystem) -> DiffOp:
    """
    [H,[H,eta]] - eta R0(H) - [H,eta] R1(H) - R-1(H), in the operator
    algebra on polynomials in eta.
    """
    data = model.closure_data()
    op = model.tilde_h(0)
    eta = DiffOp.multiplication(RatFunc(Poly(ETA, ETA)))

    first = diffop_commutator(op, eta)
    second = diffop_commutator(op, first)

    return (
        second
        - eta * polynomial_of(op, data.R0)
        - first * polynomial_of(op, data.R1)
        - polynomial_of(op, data.Rm1)
    )


def _frequencies(model: ModelSystem, energy) -> Tuple[Rational, Rational]:
    data = model.closure_data()
    r1 = Rational(data.R1.eval(energy))
    r0 = Rational(data.R0.eval(energy))
    disc = r1**2 + 4 * r0
    root = sqrt(disc)
    if not root.is_Rational:
        raise InvariantViolation(
            "heisenberg-discriminant",
            residual=disc,
            detail=f"R1^2 + 4 R0 = {disc} is not a rational square",
        )
    return (r1 + root) / 2, (r1 - root) / 2


def heisenberg_step_check(
    model: ModelSystem, n: int
) -> Tuple[Rational, Rational]:
    """
    Returns alpha_+(E(n)), alpha_-(E(n)) and asserts
    E(n +- 1) = E(n) + alpha_+-(E(n)).
    """
    energy = model.energy(n)
    alpha_plus, alpha_minus = _frequencies(model, energy)

    checks = [("heisenberg-up", n + 1, alpha_plus)]
    if n >= 1:
        checks.append(("heisenberg-down", n - 1, alpha_minus))

    for name, level, alpha in checks:
        residual = model.energy_formal(level) - energy - alpha
        if residual != 0:
            raise InvariantViolation(name, residual=residual)

    return alpha_plus, alpha_minus


def _apply_ladder(
    model: ModelSystem, p: Poly, energy, direction: LadderDirection
) -> Poly:
    """
    a^(+-) applied to the eigenpolynomial p of energy `energy`.
    """
    data = model.closure_data()
    alpha_plus, alpha_minus = _frequencies(model, energy)
    offset = Rational(data.Rm1.eval(energy)) / Rational(data.R0.eval(energy))

    eta_p = Poly(ETA, ETA) * p
    commutator = model.tilde_h(0).apply_poly(eta_p) - eta_p * energy
    shifted = eta_p + p * offset

    if direction == LadderDirection.UP:
        return (commutator - shifted * alpha_minus) * (
            1 / (alpha_plus - alpha_minus)
        )
    return (commutator - shifted * alpha_plus) * (
        -1 / (alpha_plus - alpha_minus)
    )


def _coefficient_of(result: Poly, target: Poly, name: str) -> Rational:
    if result.is_zero:
        return Rational(0)
    c = Rational(result.LC()) / Rational(target.LC())
    residual = result - target * c
    if result.degree() != target.degree() or not residual.is_zero:
        raise InvariantViolation(name, residual=residual)
    return c


def ladder_action(
    model: ModelSystem, n: int, direction: LadderDirection
) -> Rational:
    """
    a^(+) phi_n = A_n phi_(n+1) and a^(-) phi_n = C_n phi_(n-1); returns
    A_n or C_n.  The down action on the ground state is zero.
    """
    direction = LadderDirection(direction)
    p = model.eigen_poly(n)
    result = _apply_ladder(model, p, model.energy(n), direction)

    if direction == LadderDirection.DOWN and n == 0:
        if not result.is_zero:
            raise InvariantViolation("ladder-down", residual=result)
        return Rational(0)

    step = 1 if direction == LadderDirection.UP else -1
    target = model.eigen_poly_formal(n + step)
    return _coefficient_of(result, target, f"ladder-{direction.value}")


def _composed(model: ModelSystem, n: int, first: LadderDirection) -> Rational:
    p = model.eigen_poly_formal(n)
    step = 1 if first == LadderDirection.UP else -1
    second = (
        LadderDirection.DOWN
        if first == LadderDirection.UP
        else LadderDirection.UP
    )

    middle = _apply_ladder(model, p, model.energy_formal(n), first)
    if middle.is_zero:
        return Rational(0)
    result = _apply_ladder(model, middle, model.energy_formal(n + step), second)
    return _coefficient_of(result, p, "ladder-product")


def ladder_products(model: ModelSystem, n: int) -> Tuple[Rational, Rational]:
    """
    (f(E_n), g(E_n)) with a+ a- phi_n = f(E_n) phi_n and
    a- a+ phi_n = g(E_n) phi_n.  Asserts g(E_n) = f(E_(n+1)).
    """
    model.check_level(n)
    f = (
        Rational(0)
        if n == 0
        else _composed(model, n, LadderDirection.DOWN)
    )
    g = _composed(model, n, LadderDirection.UP)

    f_next = _composed(model, n + 1, LadderDirection.DOWN)
    if g != f_next:
        raise InvariantViolation("ladder-product", residual=g - f_next)

    return f, g


def norm_closed_form(model: ModelSystem, n: int) -> NormDescriptor:
    """
    h_n = (phi_n, phi_n) in closed form.
    """
    model.check_level(n)
    n_fact = factorial(n)

    if model.model_id == ModelId.H:
        return NormDescriptor(Rational(2**n * n_fact), NormTag.SQRT_PI)

    if model.model_id == ModelId.L:
        return NormDescriptor(
            1 / (2 * Rational(n_fact)), NormTag.GAMMA, (n + model.g + HALF,)
        )

    if model.model_id == ModelId.J:
        g, h = model.g, model.h
        return NormDescriptor(
            1 / (2 * n_fact * (2 * n + g + h)),
            NormTag.GAMMA,
            (n + g + HALF, n + h + HALF),
            (n + g + h,),
        )

    raise UnsupportedModelError(
        f"No closed form norm for {model.model_id.value}"
    )


def boundary_exponents(
    model: ModelSystem,
) -> Dict[str, Tuple[Rational, Rational]]:
    """
    The characteristic exponents at each regular singular boundary.
    """
    return model.boundary_exponents()


def _a_dagger(model: ModelSystem, f: PrefactoredFunction):
    # A^dagger f = -(phi_0 f)'/phi_0
    phi0 = model.ground_state()
    return -model.dx(phi0 * f) / phi0


def rodrigues_check(model: ModelSystem, n: int) -> Rational:
    """
    phi_n(lambda) = c A(lambda)^dagger ... A(lambda + (n-1) delta)^dagger
    phi_0(lambda + n delta).  Returns c.
    """
    target = model.eigenfunction(n)
    current = model.shifted(n).ground_state()
    for s in reversed(range(n)):
        current = _a_dagger(model.shifted(s), current)

    c = target.proportionality(current)
    if c is None or c == 0:
        raise InvariantViolation(
            "rodrigues", detail=f"{target} is not a multiple of {current}"
        )
    return c


def _imaginary_x(p: Poly) -> Poly:
    coeffs = coeffs_ascending(p)
    if any(c != 0 for c in coeffs[1::2]):
        raise InvariantViolation(
            "x-to-ix", residual=p, detail="body is not even in x"
        )
    return poly_from_coeffs(
        [c * (-1) ** (k // 2) for k, c in enumerate(coeffs)], p.gen
    )


def discrete_symmetry_residuals(model: ModelSystem) -> Dict[str, RatFunc]:
    """
    Residuals of the discrete symmetries of the potential body: g <-> 1-g
    (and h <-> 1-h for J), h <-> -(h+1) for the soliton, and the sign flip
    of the H and L bodies under x -> ix.
    """
    body = model.potential_body()
    residuals: Dict[str, RatFunc] = {}

    def mirrored(**changes) -> RatFunc:
        params = ModelParams(**{**model.params.as_dict(), **changes})
        return model.with_params(params).potential_body()

    if model.model_id in (ModelId.L, ModelId.J):
        residuals["g<->1-g"] = body - mirrored(g=1 - model.g)
    if model.model_id == ModelId.J:
        residuals["h<->1-h"] = body - mirrored(h=1 - model.h)
    if model.model_id == ModelId.SOLITON:
        residuals["h<->-(h+1)"] = body - mirrored(h=-(model.h + 1))

    if model.model_id == ModelId.H:
        image = RatFunc(_imaginary_x(body.num), _imaginary_x(body.den))
        residuals["x->ix"] = image + body
    elif model.model_id == ModelId.L:
        # eta = x^2 -> -eta
        image = RatFunc(reflect(body.num), reflect(body.den))
        residuals["x->ix"] = image + body

    return residuals


def soliton_limits_check(model: ModelSystem) -> Optional[Rational]:
    """
    W+ - h and W- + h for the soliton ground state; returns the first
    nonzero deviation or None.
    """
    if not isinstance(model, Soliton):
        raise UnsupportedModelError(
            f"{model.model_id.value} has no asymptotic log-derivative limits"
        )
    w_plus, w_minus = model.log_derivative_limits()
    for deviation in (w_plus - model.h, w_minus + model.h):
        if deviation != 0:
            return deviation
    return None
