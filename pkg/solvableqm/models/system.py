"""
The base solvable systems: harmonic oscillator (H), radial oscillator (L),
Poschl-Teller (J) and the soliton potential.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Dict, Optional, Tuple, Type

from sympy import QQ, Poly, Rational

from solvableqm.errors import DomainError, UnsupportedModelError, UsageError
from solvableqm.exact import (
    ETA,
    Y,
    DiffOp,
    PrefactoredFunction,
    RatFunc,
)
from solvableqm.helpers import floor_prime
from solvableqm.ortho_poly import FamilyId, hermite, jacobi, laguerre

from .coordinates import (
    HERMITE_MAP,
    HYPERBOLIC_MAP,
    RADIAL_MAP,
    TRIGONOMETRIC_MAP,
    SinusoidalMap,
)

HALF = Rational(1, 2)


class ModelId(Enum):
    """
    Enum for the base systems
    """

    H = "H"
    L = "L"
    J = "J"
    SOLITON = "Soliton"

    @classmethod
    def parse(cls, value) -> "ModelId":
        """
        Accepts a ModelId or a case-insensitive name.
        """
        if isinstance(value, cls):
            return value
        for member in cls:
            if member.value.upper() == str(value).upper():
                return member
        raise UsageError(f"Unknown model {value!r}")


@dataclass(frozen=True)
class ModelParams:
    """
    The parameters lambda of a model; unused entries stay None.
    """

    g: Optional[Rational] = None
    h: Optional[Rational] = None

    def __post_init__(self):
        for name in ("g", "h"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Rational(value))

    def as_dict(self) -> Dict[str, Rational]:
        pairs = (("g", self.g), ("h", self.h))
        return {k: v for k, v in pairs if v is not None}


@dataclass(frozen=True)
class ShiftData:
    """
    Forward/backward shift data: F = cF d/deta and
    B = -4 cF^-1 (c2 d/deta + c1).
    """

    cF: Rational
    c1: Poly
    c2: Poly
    forward: Callable[[int], Rational]
    backward: Callable[[int], Rational]

    def f(self, n: int) -> Rational:
        return self.forward(n)

    def b(self, n: int) -> Rational:
        """
        b_(n-1), the coefficient of the backward relation at level n
        """
        return self.backward(n)


@dataclass(frozen=True)
class ClosureData:
    """
    [H,[H,eta]] = eta R0(H) + [H,eta] R1(H) + R-1(H)
    """

    R1: Poly
    R0: Poly
    Rm1: Poly


def _y(expr) -> Poly:
    return Poly(expr, Y, domain=QQ)


class ModelSystem:
    """
    A base system at concrete rational parameters.  Parameters are checked
    once, here; shifted copies used inside identities skip the check.
    """

    model_id: ModelId
    coord: SinusoidalMap
    delta: Tuple[Rational, ...] = ()

    def __init__(self, params: ModelParams = None, validate: bool = True):
        self.params = params or ModelParams()
        if validate:
            self.validate()

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.as_dict().items())
        return f"{self.model_id.value}({args})"

    def validate(self):
        """
        Raises DomainError if the parameters are out of range.
        """

    @property
    def g(self) -> Rational:
        return self.params.g

    @property
    def h(self) -> Rational:
        return self.params.h

    @property
    def basis(self) -> Tuple[str, ...]:
        return self.coord.basis

    def shift_params(self, s=1) -> ModelParams:
        """
        lambda + s delta
        """
        return self.params

    def shifted(self, s=1) -> "ModelSystem":
        """
        The same model at lambda + s delta, without parameter validation.
        """
        return type(self)(self.shift_params(s), validate=False)

    def with_params(self, params: ModelParams, validate=False):
        """
        The same model at other parameters.
        """
        return type(self)(params, validate=validate)

    # spectrum

    def bound_state_count(self) -> Optional[int]:
        """
        Number of discrete levels, or None when infinite.
        """
        return None

    def check_level(self, n: int):
        """
        Raises DomainError if level n does not exist.
        """
        if n < 0:
            raise DomainError(f"Level must be non-negative, got {n}")
        count = self.bound_state_count()
        if count is not None and n >= count:
            raise DomainError(
                f"{self} has {count} bound states; level {n} does not exist"
            )

    def energy(self, n: int) -> Rational:
        """
        E(n; lambda)
        """
        self.check_level(n)
        return self.energy_formal(n)

    def energy_formal(self, n) -> Rational:
        """
        The energy formula at any (possibly negative) n, without range
        checks.
        """
        raise NotImplementedError()

    def eigen_poly(self, n: int) -> Poly:
        """
        The polynomial part P_n(eta) of phi_n.
        """
        self.check_level(n)
        return self.eigen_poly_formal(n)

    def eigen_poly_formal(self, n: int) -> Poly:
        raise NotImplementedError()

    def family(self, n: int = 0) -> FamilyId:
        """
        The classical family of the polynomial part of level n.
        """
        raise NotImplementedError()

    def level_prefactor(self, n: int = 0) -> PrefactoredFunction:
        """
        The prefactor of phi_n; phi_0 for every level except in the
        soliton case.
        """
        return self.ground_state()

    def ground_state(self) -> PrefactoredFunction:
        raise NotImplementedError()

    def eigenfunction(self, n: int) -> PrefactoredFunction:
        """
        phi_n = prefactor * P_n(eta)
        """
        return self.level_prefactor(n) * RatFunc(self.eigen_poly(n))

    # calculus in x

    def dx(self, f: PrefactoredFunction) -> PrefactoredFunction:
        return self.coord.dx(f)

    def potential(self) -> RatFunc:
        """
        U(eta) = phi_0''/phi_0 + E(0)
        """
        phi0 = self.ground_state()
        return self.dx(self.dx(phi0)).ratio(phi0) + self.energy_formal(0)

    def schrodinger_residual(
        self, f: PrefactoredFunction, energy, delta_u: RatFunc = None
    ) -> RatFunc:
        """
        f''/f - (U + delta U) + E, which vanishes for a solution.
        """
        u = self.potential()
        if delta_u is not None:
            u = u + delta_u
        return self.dx(self.dx(f)).ratio(f) - u + energy

    def prepotential_derivatives(self) -> Tuple[RatFunc, RatFunc]:
        """
        (w'^2, w'') as rational functions of eta, with w = log phi_0.
        """
        phi0 = self.ground_state()
        w1_sq = (self.dx(phi0) ** 2).ratio(phi0**2)
        w2 = self.dx(self.dx(phi0)).ratio(phi0) - w1_sq
        return w1_sq, w2

    def tilde_h(self, n: int = 0) -> DiffOp:
        """
        The similarity transformed Hamiltonian G^-1 H G on polynomials in
        eta, with G the prefactor of level n.
        """
        g = self.level_prefactor(n)
        eta_prime_sq = self.coord.eta_prime**2
        drift = RatFunc(self.coord.eta_double_prime) + 2 * (
            eta_prime_sq * g.diff()
        ).ratio(g)
        zeroth = self.potential() - self.dx(self.dx(g)).ratio(g)
        return DiffOp([zeroth, -drift, -RatFunc(self.coord.eta_prime_squared)])

    def c1_c2(self) -> Tuple[Poly, Poly]:
        """
        c2 = eta'^2/4 and c1 = (eta'' + 2 w' eta')/4 as polynomials.
        """
        phi0 = self.ground_state()
        w_eta = (self.coord.eta_prime**2 * phi0.diff()).ratio(phi0)
        c1 = (RatFunc(self.coord.eta_double_prime) + 2 * w_eta) * HALF * HALF
        c2 = RatFunc(self.coord.eta_prime_squared) * HALF * HALF
        return c1.as_poly(), c2.as_poly()

    def shift_data(self) -> ShiftData:
        raise UnsupportedModelError(f"No shift data for {self.model_id.value}")

    def closure_data(self) -> ClosureData:
        raise UnsupportedModelError(
            f"No closure relation for {self.model_id.value}"
        )

    def boundary_exponents(self) -> Dict[str, Tuple[Rational, Rational]]:
        raise UnsupportedModelError(
            f"{self.model_id.value} has no regular singular boundary"
        )

    def potential_body(self) -> RatFunc:
        """
        The parameter dependent part of U without its constant shift.
        """
        raise UnsupportedModelError(
            f"No discrete symmetry data for {self.model_id.value}"
        )


class Harmonic(ModelSystem):
    """
    H: U = x^2 - 1, eta = x, P_n = H_n.
    """

    model_id = ModelId.H
    coord = HERMITE_MAP

    def energy_formal(self, n) -> Rational:
        return Rational(2 * n)

    def eigen_poly_formal(self, n: int) -> Poly:
        return hermite(n, ETA)

    def family(self, n: int = 0) -> FamilyId:
        return FamilyId.hermite()

    def ground_state(self) -> PrefactoredFunction:
        return PrefactoredFunction(1, Poly(-(ETA**2) / 2, ETA, domain=QQ))

    def shift_data(self) -> ShiftData:
        c1, c2 = self.c1_c2()
        return ShiftData(
            Rational(1),
            c1,
            c2,
            lambda n: Rational(2 * n),
            lambda n: Rational(1),
        )

    def closure_data(self) -> ClosureData:
        return ClosureData(_y(0), _y(4), _y(0))

    def potential_body(self) -> RatFunc:
        return self.potential() + 1


class Radial(ModelSystem):
    """
    L: U = x^2 + g(g-1)/x^2 - (1 + 2g), eta = x^2, P_n = L_n^(g-1/2).
    """

    model_id = ModelId.L
    coord = RADIAL_MAP
    delta = (Rational(1),)

    def validate(self):
        if self.g is None:
            raise UsageError("L needs the parameter g")
        if self.g <= HALF:
            raise DomainError(f"L requires g > 1/2, got g={self.g}")

    def shift_params(self, s=1) -> ModelParams:
        return replace(self.params, g=self.g + s)

    def energy_formal(self, n) -> Rational:
        return Rational(4 * n)

    def eigen_poly_formal(self, n: int) -> Poly:
        return laguerre(n, self.g - HALF, ETA)

    def family(self, n: int = 0) -> FamilyId:
        return FamilyId.laguerre(self.g - HALF)

    def ground_state(self) -> PrefactoredFunction:
        return PrefactoredFunction(
            1, Poly(-ETA / 2, ETA, domain=QQ), ("eta",), [self.g / 2]
        )

    def shift_data(self) -> ShiftData:
        c1, c2 = self.c1_c2()
        return ShiftData(
            Rational(2),
            c1,
            c2,
            lambda n: Rational(-2),
            lambda n: Rational(-2 * n),
        )

    def closure_data(self) -> ClosureData:
        g = self.g
        return ClosureData(_y(0), _y(16), _y(-8 * (Y + 2 * g + 1)))

    def boundary_exponents(self) -> Dict[str, Tuple[Rational, Rational]]:
        return {"x=0": (self.g, 1 - self.g)}

    def potential_body(self) -> RatFunc:
        return self.potential() + (1 + 2 * self.g)


class PoschlTeller(ModelSystem):
    """
    J: U = g(g-1)/sin^2 x + h(h-1)/cos^2 x - (g+h)^2, eta = cos 2x,
    P_n = P_n^(g-1/2, h-1/2).
    """

    model_id = ModelId.J
    coord = TRIGONOMETRIC_MAP
    delta = (Rational(1), Rational(1))

    def validate(self):
        if self.g is None or self.h is None:
            raise UsageError("J needs the parameters g and h")
        if self.g <= HALF or self.h <= HALF:
            raise DomainError(
                f"J requires g > 1/2 and h > 1/2, got g={self.g}, h={self.h}"
            )

    def shift_params(self, s=1) -> ModelParams:
        return ModelParams(self.g + s, self.h + s)

    def energy_formal(self, n) -> Rational:
        return Rational(4 * n * (n + self.g + self.h))

    def eigen_poly_formal(self, n: int) -> Poly:
        return jacobi(n, self.g - HALF, self.h - HALF, ETA)

    def family(self, n: int = 0) -> FamilyId:
        return FamilyId.jacobi(self.g - HALF, self.h - HALF)

    def ground_state(self) -> PrefactoredFunction:
        # sin^g x cos^h x
        return PrefactoredFunction(
            1, 0, ("sin2", "cos2"), [self.g / 2, self.h / 2]
        )

    def shift_data(self) -> ShiftData:
        c1, c2 = self.c1_c2()
        g, h = self.g, self.h
        return ShiftData(
            Rational(-4),
            c1,
            c2,
            lambda n: -2 * (n + g + h),
            lambda n: Rational(-2 * n),
        )

    def closure_data(self) -> ClosureData:
        g, h = self.g, self.h
        return ClosureData(
            _y(8),
            _y(16 * (Y + (g + h) ** 2 - 1)),
            _y(16 * (g - h) * (g + h - 1)),
        )

    def boundary_exponents(self) -> Dict[str, Tuple[Rational, Rational]]:
        return {
            "x=0": (self.g, 1 - self.g),
            "x=pi/2": (self.h, 1 - self.h),
        }

    def potential_body(self) -> RatFunc:
        return self.potential() + (self.g + self.h) ** 2


class Soliton(ModelSystem):
    """
    U = -h(h+1)/cosh^2 x, eta = tanh x, phi_n = sech^(h-n) x P_n^(h-n,h-n).
    """

    model_id = ModelId.SOLITON
    coord = HYPERBOLIC_MAP
    delta = (Rational(-1),)

    def validate(self):
        if self.h is None:
            raise UsageError("Soliton needs the parameter h")
        if self.h <= HALF:
            raise DomainError(f"Soliton requires h > 1/2, got h={self.h}")

    def shift_params(self, s=1) -> ModelParams:
        return replace(self.params, h=self.h - s)

    def bound_state_count(self) -> Optional[int]:
        return floor_prime(self.h) + 1

    def energy_formal(self, n) -> Rational:
        return -((self.h - n) ** 2)

    def eigen_poly_formal(self, n: int) -> Poly:
        a = self.h - n
        return jacobi(n, a, a, ETA)

    def family(self, n: int = 0) -> FamilyId:
        a = self.h - n
        return FamilyId.jacobi(a, a)

    def level_prefactor(self, n: int = 0) -> PrefactoredFunction:
        # sech^a x = (1 - eta)^(a/2) (1 + eta)^(a/2)
        a = self.h - n
        return PrefactoredFunction(1, 0, ("1-eta", "1+eta"), [a / 2, a / 2])

    def ground_state(self) -> PrefactoredFunction:
        return self.level_prefactor(0)

    def eigenfunction(self, n: int) -> PrefactoredFunction:
        return self.level_prefactor(n) * RatFunc(self.eigen_poly(n))

    def potential_body(self) -> RatFunc:
        return self.potential()

    def log_derivative_limits(self) -> Tuple[Rational, Rational]:
        """
        (W+, W-) = -lim w'(x) at x -> +inf and x -> -inf, read off the
        ground state exponents of (1 - eta) and (1 + eta).
        """
        a, b = self.ground_state().exponents
        # (1 - eta)^a ~ 2^a e^(-2ax) at +inf, (1 + eta)^b ~ 2^b e^(2bx) at -inf
        return 2 * a, -2 * b


MODELS: Dict[ModelId, Type[ModelSystem]] = {
    ModelId.H: Harmonic,
    ModelId.L: Radial,
    ModelId.J: PoschlTeller,
    ModelId.SOLITON: Soliton,
}


def make_model(model, params: ModelParams = None, **kwargs) -> ModelSystem:
    """
    Builds and validates a base system.  Parameters may be given as a
    ModelParams or as g=, h= keywords.
    """
    if params is None:
        params = ModelParams(**kwargs)
    return MODELS[ModelId.parse(model)](params)
