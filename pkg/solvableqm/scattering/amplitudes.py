"""
Transmission and reflection amplitudes as Gamma quotients times rational
factors in ik.

An AmplitudeExpr is

    rational(ik) * prod Gamma(a_i + b_i ik) / prod Gamma(c_j + d_j ik)

with every coefficient exact.  Evaluation goes through the complex log
gamma; poles are reported, never stepped over.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize, special
from sympy import QQ, Poly, Rational, Symbol

from solvableqm.darboux import SeedKind, SeedSpec, make_seed
from solvableqm.errors import (
    DomainError,
    InvariantViolation,
    PoleError,
    UsageError,
)
from solvableqm.exact import RatFunc
from solvableqm.helpers import floor_prime
from solvableqm.models import HALF, ModelParams, Soliton
from solvableqm.numeric.special import log_gamma_complex, pole_distance
from solvableqm.numeric.tolerances import (
    AMPLITUDE_RATIO,
    POLE_DISTANCE,
    POLE_LOCATION,
    UNITARITY,
)

# the rational factors are functions of s = ik
IK = Symbol("ik")


def _s_poly(expr) -> Poly:
    return Poly(expr, IK, domain=QQ)


def _one() -> RatFunc:
    return RatFunc(_s_poly(1))


@dataclass(frozen=True)
class AffineForm:
    """
    a + b ik
    """

    a: Rational
    b: Rational = Rational(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Rational(self.a))
        object.__setattr__(self, "b", Rational(self.b))

    def at(self, s: complex) -> complex:
        return complex(float(self.a) + float(self.b) * s)

    def is_constant(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + ({self.b}) ik"


@dataclass(frozen=True)
class AmplitudeExpr:
    """
    A Gamma quotient times a rational function of ik.  `vanishes` marks an
    amplitude whose constant denominator Gamma sits on a pole, so the
    whole expression is identically zero.
    """

    gamma_num: Tuple[AffineForm, ...] = ()
    gamma_den: Tuple[AffineForm, ...] = ()
    rational: RatFunc = field(default_factory=_one)
    vanishes: bool = False

    def scaled(self, factor: RatFunc) -> "AmplitudeExpr":
        return replace(self, rational=self.rational * factor)

    def simplified(self) -> "AmplitudeExpr":
        """
        Cancels numerator and denominator Gammas whose arguments differ by
        an integer, moving the Pochhammer quotient into the rational
        factor.
        """
        if self.vanishes:
            return self

        num = list(self.gamma_num)
        den = list(self.gamma_den)
        rational = self.rational
        for top in list(num):
            for bottom in den:
                diff = top.a - bottom.a
                if top.b != bottom.b or not diff.is_integer:
                    continue
                rational = rational * _pochhammer(bottom, int(diff))
                num.remove(top)
                den.remove(bottom)
                break

        return AmplitudeExpr(tuple(num), tuple(den), rational)

    def is_rational(self) -> bool:
        return not self.gamma_num and not self.gamma_den

    def __str__(self):
        if self.vanishes:
            return "0"
        if self.is_rational():
            return str(self.rational)
        num = " ".join(f"G({f})" for f in self.gamma_num)
        den = " ".join(f"G({f})" for f in self.gamma_den)
        gammas = f"[{num or '1'}] / [{den or '1'}]"
        if self.rational == 1:
            return gammas
        return f"({self.rational}) * {gammas}"


def _pochhammer(z: AffineForm, n: int) -> RatFunc:
    """
    Gamma(z + n) / Gamma(z) as a rational function of ik
    """
    base = _s_poly(z.a + z.b * IK)
    result = _one()
    if n >= 0:
        for j in range(n):
            result = result * RatFunc(base + j)
    else:
        for j in range(1, -n + 1):
            result = result / RatFunc(base - j)
    return result


def _on_pole(value: Rational) -> bool:
    return bool(value.is_integer and value <= 0)


def soliton_amplitudes(
    h, validate: bool = True
) -> Tuple[AmplitudeExpr, AmplitudeExpr]:
    """
    t(k; h) and r(k; h) of U = -h(h+1)/cosh^2 x.  At integer h the
    reflection amplitude vanishes identically through 1/Gamma(-h).
    """
    h = Rational(h)
    if validate and h <= HALF:
        raise DomainError(f"Soliton requires h > 1/2, got h={h}")

    t = AmplitudeExpr(
        gamma_num=(AffineForm(-h, -1), AffineForm(1 + h, -1)),
        gamma_den=(AffineForm(0, -1), AffineForm(1, -1)),
    )
    r = AmplitudeExpr(
        gamma_num=(
            AffineForm(0, 1),
            AffineForm(-h, -1),
            AffineForm(1 + h, -1),
        ),
        gamma_den=(AffineForm(0, -1), AffineForm(-h), AffineForm(1 + h)),
        vanishes=_on_pole(-h) or _on_pole(1 + h),
    )
    return t, r


def _rational_value(rational: RatFunc, s: complex) -> complex:
    num = np.polyval([float(c) for c in rational.num.all_coeffs()], s)
    den = np.polyval([float(c) for c in rational.den.all_coeffs()], s)
    if abs(den) < POLE_DISTANCE:
        raise PoleError(f"{rational} has a pole at ik={s}", abs(den))
    return complex(num / den)


def evaluate_amplitude(expr: AmplitudeExpr, k: complex) -> complex:
    """
    The amplitude at complex k.
    """
    if expr.vanishes:
        return 0j
    s = 1j * complex(k)

    logs = 0j
    for form in expr.gamma_num:
        z = form.at(s)
        if pole_distance(z) < POLE_DISTANCE:
            raise PoleError(
                f"Amplitude has a pole at k={k}", pole_distance(z)
            )
        logs += log_gamma_complex(z)
    for form in expr.gamma_den:
        z = form.at(s)
        if pole_distance(z) < POLE_DISTANCE:
            return 0j
        logs -= log_gamma_complex(z)

    return complex(np.exp(logs)) * _rational_value(expr.rational, s)


def unitarity_residual(h, ks: Sequence[float]) -> float:
    """
    max | |t|^2 + |r|^2 - 1 | over real k
    """
    t, r = soliton_amplitudes(h)
    worst = 0.0
    for k in ks:
        total = abs(evaluate_amplitude(t, k)) ** 2
        total += abs(evaluate_amplitude(r, k)) ** 2
        worst = max(worst, abs(total - 1))
    if worst > UNITARITY:
        raise InvariantViolation("unitarity", residual=worst, detail=f"h={h}")
    return worst


def shape_constraint_check(h, ks: Sequence[float]) -> Tuple[float, float]:
    """
    Checks t(k; h-1) / t(k; h) = (ik + W+)/(ik + W-) and
    r(k; h-1) / r(k; h) = (-ik + W-)/(ik + W-) at real k, with (W+, W-)
    the soliton's asymptotic log derivatives.  Returns the largest
    deviation of each ratio.
    """
    model = Soliton(ModelParams(h=Rational(h)))
    w_plus, w_minus = model.log_derivative_limits()
    t, r = soliton_amplitudes(h)
    t_low, r_low = soliton_amplitudes(model.h - 1, validate=False)

    t_worst = r_worst = 0.0
    for k in ks:
        s = 1j * k
        expected = (s + float(w_plus)) / (s + float(w_minus))
        found = evaluate_amplitude(t_low, k) / evaluate_amplitude(t, k)
        t_worst = max(t_worst, abs(found - expected))

        if r.vanishes or r_low.vanishes:
            continue
        expected = (-s + float(w_minus)) / (s + float(w_minus))
        found = evaluate_amplitude(r_low, k) / evaluate_amplitude(r, k)
        r_worst = max(r_worst, abs(found - expected))

    if max(t_worst, r_worst) > AMPLITUDE_RATIO:
        raise InvariantViolation(
            "shape-constraint", residual=max(t_worst, r_worst), detail=f"h={h}"
        )
    return t_worst, r_worst


def amplitude_symmetry_check(h, ks: Sequence[float]) -> float:
    """
    t and r are unchanged under h -> -(h+1)
    """
    h = Rational(h)
    t, r = soliton_amplitudes(h)
    t_m, r_m = soliton_amplitudes(-(h + 1), validate=False)
    if r.vanishes != r_m.vanishes:
        raise InvariantViolation(
            "amplitude-symmetry", detail="r vanishes on one side only"
        )

    worst = 0.0
    for k in ks:
        worst = max(
            worst,
            abs(evaluate_amplitude(t, k) - evaluate_amplitude(t_m, k)),
            abs(evaluate_amplitude(r, k) - evaluate_amplitude(r_m, k)),
        )
    if worst > AMPLITUDE_RATIO:
        raise InvariantViolation("amplitude-symmetry", residual=worst)
    return worst


class Side(Enum):
    """
    Where the deformed system lives
    """

    FULL = "full"
    HALF = "half"


class AsymptoticExponents(NamedTuple):
    """
    A seed behaves as e^(plus x) at +inf and e^(minus x) at -inf.
    """

    plus: Rational
    minus: Rational
    energy: Rational


def soliton_asymptotic_exponents(h, seed: SeedSpec) -> AsymptoticExponents:
    """
    Reads the exponents off the seed's (1 - eta) and (1 + eta) powers;
    the seed energy must equal -plus^2.
    """
    if seed.kind not in (SeedKind.PSEUDO, SeedKind.OVERSHOOT):
        raise UsageError(
            f"Soliton amplitudes deform by pseudo or overshoot seeds, "
            f"not {seed}"
        )
    model = Soliton(ModelParams(h=Rational(h)))
    built = make_seed(model, seed)
    a, b = built.fn.exponents
    # (1 - eta)^a ~ e^(-2ax) at +inf, (1 + eta)^b ~ e^(2bx) at -inf
    plus, minus = -2 * a, 2 * b

    if built.energy != -(plus**2):
        raise InvariantViolation(
            "seed-asymptotics",
            residual=built.energy + plus**2,
            detail=f"seed {seed} at h={h}",
        )
    return AsymptoticExponents(plus, minus, built.energy)


@dataclass(frozen=True)
class DeformationFactor:
    """
    The asymptotic exponents of the seeds of a deformation.  On the half
    line only the +inf exponents matter.
    """

    plus: Tuple[Rational, ...]
    minus: Tuple[Rational, ...] = ()
    side: Side = Side.FULL

    def __post_init__(self):
        if self.side == Side.FULL and len(self.plus) != len(self.minus):
            raise UsageError("Full line deformations need both exponents")

    @classmethod
    def from_soliton_seeds(
        cls, h, seeds: Sequence[SeedSpec], side: Side = Side.FULL
    ) -> "DeformationFactor":
        exponents = [soliton_asymptotic_exponents(h, s) for s in seeds]
        return cls(
            tuple(e.plus for e in exponents),
            tuple(e.minus for e in exponents),
            side,
        )

    @property
    def size(self) -> int:
        return len(self.plus)

    def transmission_factor(self) -> RatFunc:
        """
        prod (k + i plus)/(k + i minus) = prod (ik - plus)/(ik - minus)
        """
        if self.side == Side.HALF:
            raise UsageError("The half line carries no transmission")
        result = _one()
        for p, m in zip(self.plus, self.minus):
            result = result * RatFunc(_s_poly(IK - p), _s_poly(IK - m))
        return result

    def reflection_factor(self) -> RatFunc:
        """
        Full line: (-1)^M prod (k - i minus)/(k + i minus).
        Half line: (-1)^M prod (k + i plus)/(k - i plus).
        """
        result = _one() * (-1) ** self.size
        if self.side == Side.FULL:
            for m in self.minus:
                result = result * RatFunc(_s_poly(IK + m), _s_poly(IK - m))
            return result
        for p in self.plus:
            result = result * RatFunc(_s_poly(IK - p), _s_poly(IK + p))
        return result


def deform_amplitudes(
    t: Optional[AmplitudeExpr], r: AmplitudeExpr, factor: DeformationFactor
) -> Tuple[Optional[AmplitudeExpr], AmplitudeExpr]:
    """
    The amplitudes of the deformed system.  The half line has no
    transmission amplitude.
    """
    r_deformed = r.scaled(factor.reflection_factor())
    if factor.side == Side.HALF:
        return None, r_deformed
    if t is None:
        raise UsageError("Full line deformations need t")
    return t.scaled(factor.transmission_factor()), r_deformed


def deformation_identity_check(factor: DeformationFactor) -> RatFunc:
    """
    With plus = -minus for every seed, t_D/t = (-1)^M r_D/r as rational
    functions of ik.  Returns the common factor.
    """
    if factor.side != Side.FULL:
        raise UsageError("The identity relates full line amplitudes")
    t_ratio = factor.transmission_factor()
    r_ratio = factor.reflection_factor() * (-1) ** factor.size
    if any(p != -m for p, m in zip(factor.plus, factor.minus)):
        raise UsageError("The identity needs plus = -minus for every seed")
    if t_ratio != r_ratio:
        raise InvariantViolation(
            "deformed-amplitudes", residual=t_ratio - r_ratio
        )
    return t_ratio


def unit_modulus_residual(
    factor: DeformationFactor, ks: Sequence[float]
) -> float:
    """
    Deformation factors only change phases on the real k axis.
    """
    worst = 0.0
    factors = [factor.reflection_factor()]
    if factor.side == Side.FULL:
        factors.append(factor.transmission_factor())
    for rational in factors:
        for k in ks:
            worst = max(worst, abs(abs(_rational_value(rational, 1j * k)) - 1))
    return worst


def _reciprocal_on_axis(expr: AmplitudeExpr, kappa: float) -> float:
    """
    1/t at k = i kappa, which is real; rgamma keeps poles of t as plain
    zeros.
    """
    s = -kappa
    value = 1.0
    for form in expr.gamma_num:
        value *= special.rgamma(float(form.a) + float(form.b) * s)
    for form in expr.gamma_den:
        value *= special.gamma(float(form.a) + float(form.b) * s)
    num = np.polyval([float(c) for c in expr.rational.num.all_coeffs()], s)
    den = np.polyval([float(c) for c in expr.rational.den.all_coeffs()], s)
    return float(value * den / num)


class PoleScan(NamedTuple):
    """
    Poles of t on the positive imaginary axis with their bound state
    energies -kappa^2.
    """

    kappas: Tuple[float, ...]
    expected: Tuple[Rational, ...]


def pole_scan(
    h, factor: Optional[DeformationFactor] = None, samples: int = 4000
) -> PoleScan:
    """
    Locates the zeros of 1/t along k = i kappa by sign changes and
    bisection, and matches them against i(h - n) plus the deformation's
    i plus_j.
    """
    h = Rational(h)
    t, _ = soliton_amplitudes(h)
    expected = [h - n for n in range(floor_prime(h) + 1)]
    if factor is not None:
        t = t.scaled(factor.transmission_factor())
        expected.extend(p for p in factor.plus if p > 0)
    expected = sorted(set(expected))

    top = float(max(expected)) + 1.0
    # shifted off any rational grid so samples avoid the poles themselves
    grid = np.linspace(1e-3, top, samples) + 1.234567e-5
    values = [_reciprocal_on_axis(t, kappa) for kappa in grid]

    found: List[float] = []
    for i in range(len(grid) - 1):
        if values[i] == 0.0:
            found.append(float(grid[i]))
        elif values[i] * values[i + 1] < 0:
            found.append(
                optimize.brentq(
                    lambda kappa: _reciprocal_on_axis(t, kappa),
                    grid[i],
                    grid[i + 1],
                    xtol=1e-14,
                )
            )

    if len(found) != len(expected) or any(
        abs(f - float(e)) > POLE_LOCATION for f, e in zip(found, expected)
    ):
        raise InvariantViolation(
            "amplitude-poles",
            detail=f"found {found}, expected {[str(e) for e in expected]}",
        )
    return PoleScan(tuple(found), tuple(expected))
