"""
Seed solutions for Darboux transformations: eigenstates, virtual states of
type I and II, pseudo virtual states and the soliton's overshoot states,
each with its exact energy and boundary classification.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from sympy import Poly, Rational

from solvableqm.errors import DomainError, UnsupportedModelError, UsageError
from solvableqm.exact import ETA, PrefactoredFunction, RatFunc, reflect
from solvableqm.helpers import floor_prime
from solvableqm.models import HALF, ModelId, ModelSystem
from solvableqm.ortho_poly import jacobi, laguerre, twisted_hermite


class SeedKind(Enum):
    """
    Enum for the seed families
    """

    EIGEN = "eigen"
    VIRTUAL_I = "virtual-I"
    VIRTUAL_II = "virtual-II"
    PSEUDO = "pseudo"
    OVERSHOOT = "overshoot"
    FREE = "free"


class SeedClass(Enum):
    """
    The boundary classification of a seed and its reciprocal
    """

    EIGEN = "eigen"
    TYPE_I = "type-I"
    TYPE_II = "type-II"
    PSEUDO = "pseudo"
    FREE = "free"
    DEGENERATE = "boundary-degenerate"
    UNCLASSIFIED = "unclassified"


class Boundary(Enum):
    """
    Local square integrability at one end of the x interval
    """

    INTEGRABLE = "integrable"
    DIVERGENT = "divergent"
    DEGENERATE = "degenerate"


# seed spec prefixes accepted on the command line
SEED_PREFIXES = {
    "e": SeedKind.EIGEN,
    "v1": SeedKind.VIRTUAL_I,
    "vi": SeedKind.VIRTUAL_I,
    "v2": SeedKind.VIRTUAL_II,
    "vii": SeedKind.VIRTUAL_II,
    "p": SeedKind.PSEUDO,
    "os": SeedKind.OVERSHOOT,
}


@dataclass(frozen=True)
class SeedSpec:
    """
    Which seed to build: a kind with its index, or for free exponential
    seeds the rational pair (k, c).
    """

    kind: SeedKind
    index: int = 0
    k: Optional[Rational] = None
    c: Optional[Rational] = None

    def __post_init__(self):
        if self.index < 0:
            raise UsageError(f"Seed index must be non-negative: {self.index}")
        if self.kind == SeedKind.FREE and (self.k is None or self.c is None):
            raise UsageError("A free exponential seed needs k and c")

    @classmethod
    def parse(cls, text: str) -> "SeedSpec":
        """
        Parses "e:2", "vI:1", "vII:0", "p:3" or "os:4".
        """
        prefix, _, index = text.strip().partition(":")
        try:
            kind = SEED_PREFIXES[prefix.lower()]
            return cls(kind, int(index))
        except (KeyError, ValueError) as exc:
            raise UsageError(
                f"Bad seed {text!r}; expected e:N, vI:N, vII:N, p:N or os:N"
            ) from exc

    def __str__(self):
        if self.kind == SeedKind.FREE:
            return f"free(k={self.k}, c={self.c})"
        return f"{self.kind.value}:{self.index}"


@dataclass(frozen=True)
class SeedFunction:
    """
    A seed with its exact energy; H fn = energy fn holds exactly.
    """

    spec: SeedSpec
    fn: PrefactoredFunction
    energy: Rational
    classification: SeedClass


def _pf(poly: Poly, exp, basis, exponents) -> PrefactoredFunction:
    return PrefactoredFunction(RatFunc(poly), exp, basis, exponents)


def _eta_half(sign) -> Poly:
    return Poly(sign * ETA / 2, ETA)


def _eta_sq_half(sign) -> Poly:
    return Poly(sign * ETA**2 / 2, ETA)


def _check_range(v: int, bound, what: str):
    top = floor_prime(bound)
    if v > top:
        raise DomainError(f"{what} needs v <= {top}, got v={v}")


def _harmonic(model: ModelSystem, spec: SeedSpec):
    v = spec.index
    if spec.kind == SeedKind.PSEUDO:
        # e^(x^2/2) i^-v H_v(ix)
        return (
            _pf(twisted_hermite(v), _eta_sq_half(1), (), []),
            Rational(-2 * (v + 1)),
        )
    return None


def _radial(model: ModelSystem, spec: SeedSpec):
    v, g = spec.index, model.g

    if spec.kind == SeedKind.VIRTUAL_I:
        return (
            _pf(
                reflect(laguerre(v, g - HALF)),
                _eta_half(1),
                ("eta",),
                [g / 2],
            ),
            -4 * (g + v + HALF),
        )
    if spec.kind == SeedKind.VIRTUAL_II:
        _check_range(v, g - HALF, "L virtual state II")
        return (
            _pf(laguerre(v, HALF - g), _eta_half(-1), ("eta",), [(1 - g) / 2]),
            -4 * (g - v - HALF),
        )
    if spec.kind == SeedKind.PSEUDO:
        return (
            _pf(
                reflect(laguerre(v, HALF - g)),
                _eta_half(1),
                ("eta",),
                [(1 - g) / 2],
            ),
            Rational(-4 * (v + 1)),
        )
    return None


def _poschl_teller(model: ModelSystem, spec: SeedSpec):
    v, g, h = spec.index, model.g, model.h
    basis = ("sin2", "cos2")

    if spec.kind == SeedKind.VIRTUAL_I:
        _check_range(v, h - HALF, "J virtual state I")
        return (
            _pf(jacobi(v, g - HALF, HALF - h), 0, basis, [g / 2, (1 - h) / 2]),
            -4 * (g + v + HALF) * (h - v - HALF),
        )
    if spec.kind == SeedKind.VIRTUAL_II:
        _check_range(v, g - HALF, "J virtual state II")
        return (
            _pf(jacobi(v, HALF - g, h - HALF), 0, basis, [(1 - g) / 2, h / 2]),
            -4 * (g - v - HALF) * (h + v + HALF),
        )
    if spec.kind == SeedKind.PSEUDO:
        return (
            _pf(
                jacobi(v, HALF - g, HALF - h),
                0,
                basis,
                [(1 - g) / 2, (1 - h) / 2],
            ),
            -4 * (v + 1) * (g + h - v - 1),
        )
    return None


def _soliton(model: ModelSystem, spec: SeedSpec):
    v, h = spec.index, model.h
    basis = ("1-eta", "1+eta")

    if spec.kind == SeedKind.PSEUDO:
        # cosh^(h+1+v) x = (1 - eta)^(-(h+1+v)/2) (1 + eta)^(-(h+1+v)/2)
        a = -(h + 1 + v)
        return (
            _pf(jacobi(v, a, a), 0, basis, [a / 2, a / 2]),
            -((h + 1 + v) ** 2),
        )
    if spec.kind == SeedKind.OVERSHOOT:
        if v <= 2 * h:
            raise DomainError(
                f"Overshoot states need v > 2h = {2 * h}, got v={v}"
            )
        a = h - v
        poly = jacobi(v, a, a)
        if poly.is_zero:
            raise DomainError(
                f"The overshoot state v={v} vanishes identically at h={h}"
            )
        return (
            _pf(poly, 0, basis, [a / 2, a / 2]),
            model.energy_formal(v),
        )
    return None


SEED_BUILDERS: Dict[ModelId, Callable] = {
    ModelId.H: _harmonic,
    ModelId.L: _radial,
    ModelId.J: _poschl_teller,
    ModelId.SOLITON: _soliton,
}


def _power_end(rho) -> Boundary:
    """
    |x - x0|^rho near a finite end
    """
    twice = 2 * rho
    if twice > -1:
        return Boundary.INTEGRABLE
    if twice == -1:
        return Boundary.DEGENERATE
    return Boundary.DIVERGENT


def _infinite_end(exp_sign: int, x_degree) -> Boundary:
    """
    Behaviour at |x| -> oo: the exponential factor decides when present,
    otherwise the power |x|^x_degree.
    """
    if exp_sign:
        return Boundary.INTEGRABLE if exp_sign < 0 else Boundary.DIVERGENT
    twice = 2 * x_degree
    if twice < -1:
        return Boundary.INTEGRABLE
    if twice == -1:
        return Boundary.DEGENERATE
    return Boundary.DIVERGENT


def _sign(value) -> int:
    if value > 0:
        return 1
    return -1 if value < 0 else 0


def _rational_degree(f: PrefactoredFunction) -> int:
    r = f.ratfunc
    return r.num.degree() - r.den.degree()


def _leading_exp(f: PrefactoredFunction) -> Tuple[int, Rational]:
    if f.exp.is_zero or f.exp.degree() == 0:
        return 0, Rational(0)
    return f.exp.degree(), Rational(f.exp.LC())


def boundary_behaviour(
    model: ModelSystem, f: PrefactoredFunction
) -> List[Boundary]:
    """
    [left end, right end] square integrability of f on the model's x
    interval, read off the prefactor exponents.
    """
    model_id = model.model_id

    if model_id == ModelId.H:
        degree, lc = _leading_exp(f)
        power = _rational_degree(f)
        right = _sign(lc)
        left = _sign(lc * (-1) ** degree)
        return [
            _infinite_end(left, power),
            _infinite_end(right, power),
        ]

    if model_id == ModelId.L:
        (a,) = f.exponents
        degree, lc = _leading_exp(f)
        x_degree = 2 * (a + _rational_degree(f))
        return [
            _power_end(2 * a),
            _infinite_end(_sign(lc), x_degree),
        ]

    if model_id == ModelId.J:
        a_sin, a_cos = f.exponents
        return [_power_end(2 * a_sin), _power_end(2 * a_cos)]

    # soliton: (1 - eta)^a ~ e^(-2ax) at +oo, (1 + eta)^b ~ e^(2bx) at -oo
    a, b = f.exponents
    return [
        _infinite_end(-_sign(b), 0),
        _infinite_end(-_sign(a), 0),
    ]


def classify_seed(seed, model: ModelSystem) -> SeedClass:
    """
    Classifies a seed (SeedFunction or bare PrefactoredFunction) by the
    square integrability of it and its reciprocal at both ends.
    """
    fn = seed.fn if isinstance(seed, SeedFunction) else seed
    if isinstance(seed, SeedFunction) and seed.spec.kind == SeedKind.FREE:
        return SeedClass.FREE

    f_left, f_right = boundary_behaviour(model, fn)
    r_left, r_right = boundary_behaviour(model, fn**-1)
    ends = (f_left, f_right, r_left, r_right)

    ok, bad = Boundary.INTEGRABLE, Boundary.DIVERGENT

    if f_left == ok and f_right == ok:
        return SeedClass.EIGEN
    if Boundary.DEGENERATE in ends:
        return SeedClass.DEGENERATE
    if (f_left, f_right, r_left, r_right) == (ok, bad, bad, ok):
        return SeedClass.TYPE_I
    if (f_left, f_right, r_left, r_right) == (bad, ok, ok, bad):
        return SeedClass.TYPE_II
    if r_left == ok and r_right == ok:
        return SeedClass.PSEUDO
    return SeedClass.UNCLASSIFIED


def make_seed(model: ModelSystem, spec: SeedSpec) -> SeedFunction:
    """
    Builds a seed solution of the model's Schrodinger equation.
    """
    if spec.kind == SeedKind.FREE:
        raise UnsupportedModelError(
            "Free exponential seeds live on the U = 0 line; "
            "see solvableqm.scattering.reflectionless"
        )

    if spec.kind == SeedKind.EIGEN:
        fn, energy = model.eigenfunction(spec.index), model.energy(spec.index)
    else:
        built = SEED_BUILDERS[model.model_id](model, spec)
        if built is None:
            raise UnsupportedModelError(
                f"{model.model_id.value} has no {spec.kind.value} seeds"
            )
        fn, energy = built

    return SeedFunction(spec, fn, energy, classify_seed(fn, model))
