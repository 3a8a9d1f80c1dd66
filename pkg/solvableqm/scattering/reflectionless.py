"""
Reflectionless potentials: the Kay-Moses determinant, its construction as
a Darboux deformation of U = 0 by exponential seeds, and the KdV
N-soliton it becomes when the c_j are dressed with time.
"""

from dataclasses import dataclass
from math import factorial
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, Poly, Rational

from solvableqm.errors import (
    DegeneracyError,
    InvariantViolation,
    UsageError,
)
from solvableqm.exact import RatFunc, poly_det
from solvableqm.numeric.tolerances import KDV_NUMERIC

from .amplitudes import IK, AmplitudeExpr, soliton_amplitudes
from .expsum import ExpRatio, ExpSum, expsum_det, expsum_wronskian

# soliton counts whose KdV residual is cancelled exactly
EXACT_KDV_LIMIT = 2

KDV_X_RANGE = (-10.0, 10.0)
KDV_POINTS = 401


@dataclass(frozen=True)
class ReflectionlessSpec:
    """
    0 < k_1 < ... < k_N with positive c_j
    """

    ks: Tuple[Rational, ...]
    cs: Tuple[Rational, ...]

    def __post_init__(self):
        ks = tuple(Rational(k) for k in self.ks)
        cs = tuple(Rational(c) for c in self.cs)
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "cs", cs)

        if not ks:
            raise UsageError("A reflectionless potential needs k_1..k_N")
        if len(ks) != len(cs):
            raise UsageError(
                f"Got {len(ks)} values of k but {len(cs)} values of c"
            )
        if ks[0] <= 0 or any(a >= b for a, b in zip(ks, ks[1:])):
            raise UsageError(
                f"k must be positive and strictly increasing: {list(ks)}"
            )
        if any(c <= 0 for c in cs):
            raise UsageError(f"c must be positive: {list(cs)}")

    @property
    def size(self) -> int:
        return len(self.ks)


class KayMoses(NamedTuple):
    """
    u_N and U_N = -2 (u u'' - u'^2) / u^2
    """

    u: ExpSum
    potential: ExpRatio


def kay_moses(spec: ReflectionlessSpec, dressed: bool = False) -> KayMoses:
    """
    u_N = det(delta_mn + c_m e^(-(k_m + k_n) x) / (k_m + k_n)).  With
    `dressed` each c_m carries e^(8 k_m^3 t).
    """
    rows: List[List[ExpSum]] = []
    for m, (k_m, c_m) in enumerate(zip(spec.ks, spec.cs)):
        nu = 8 * k_m**3 if dressed else 0
        row = []
        for n, k_n in enumerate(spec.ks):
            entry = ExpSum.exponential(-(k_m + k_n), nu, c_m / (k_m + k_n))
            if m == n:
                entry = entry + 1
            row.append(entry)
        rows.append(row)

    u = expsum_det(rows)
    return KayMoses(u, _log_potential(u))


def _log_potential(u: ExpSum) -> ExpRatio:
    """
    -2 (log u)'' over u^2
    """
    u1 = u.dx()
    return ExpRatio((u * u1.dx() - u1 * u1) * -2, u, 2)


def single_soliton_check(spec: ReflectionlessSpec) -> Rational:
    """
    For N = 1, U = -2 k^2 sech^2(k x - phi) with e^(2 phi) = c / 2k.
    Returns e^(2 phi).
    """
    if spec.size != 1:
        raise UsageError("The single soliton profile needs N = 1")
    k, c = spec.ks[0], spec.cs[0]
    a = c / (2 * k)

    profile = ExpRatio(
        ExpSum.exponential(-2 * k, 0, -8 * k**2 * a),
        ExpSum.exponential(-2 * k, 0, a) + 1,
        2,
    )
    found = kay_moses(spec).potential
    if not found.equals(profile):
        raise InvariantViolation(
            "single-soliton", detail=f"k={k}, c={c} is not a sech^2 profile"
        )
    return a


def seed_coefficients(spec: ReflectionlessSpec) -> Tuple[Rational, ...]:
    """
    c~_j of the seeds e^(k_j x) + c~_j e^(-k_j x), chosen so the
    coefficient of e^(-2 k_j x) in the stripped Wronskian is c_j / 2k_j.
    They alternate in sign: (-1)^(j-1) c~_j > 0.
    """
    result = []
    for j, (k_j, c_j) in enumerate(zip(spec.ks, spec.cs)):
        value = c_j / (2 * k_j)
        for l, k_l in enumerate(spec.ks):
            if l != j:
                value *= abs(k_j - k_l) / (k_j + k_l)
        result.append(value * (-1) ** j)
    return tuple(result)


def _vandermonde(values: Sequence[Rational]) -> Rational:
    result = Rational(1)
    for j, a in enumerate(values):
        for b in values[:j]:
            result *= a - b
    return result


def plane_wave_factors(spec: ReflectionlessSpec) -> Tuple[Poly, Poly]:
    """
    The factors a plane wave e^(ikx) picks up from the deformation at
    +inf and at -inf, prod (ik - k_j) and prod (ik + k_j), as quotients
    of exponential Wronskians' Vandermonde determinants.
    """

    def ratio(alphas: Sequence[Rational]) -> Poly:
        size = len(alphas) + 1
        rows = []
        for r in range(size):
            row = [Poly(a**r, IK, domain=QQ) for a in alphas]
            row.append(Poly(IK**r, IK, domain=QQ))
            rows.append(row)
        return poly_det(rows) * (1 / _vandermonde(alphas))

    plus = ratio(spec.ks)
    minus = ratio([-k for k in spec.ks])
    return plus, minus


def reflectionless_amplitudes(
    spec: ReflectionlessSpec,
) -> Tuple[AmplitudeExpr, AmplitudeExpr]:
    """
    t = prod (ik - k_j)/(ik + k_j) and r = 0
    """
    plus, minus = plane_wave_factors(spec)
    t = AmplitudeExpr(rational=RatFunc(plus, minus))
    return t, AmplitudeExpr(vanishes=True)


@dataclass
class EquivalenceReport:
    """
    The Darboux construction of a Kay-Moses potential.
    """

    seed_coefficients: Tuple[Rational, ...]
    vandermonde: Rational
    plane_wave_plus: Poly
    plane_wave_minus: Poly
    deviation: float = 0.0


def wronskian_equivalence(
    spec: ReflectionlessSpec, x: Optional[np.ndarray] = None
) -> EquivalenceReport:
    """
    Deforms U = 0 by psi_j = e^(k_j x) + c~_j e^(-k_j x) and checks
    W = Vandermonde(k) e^(sum k x) u_N and -2 (log W)'' = U_N exactly.
    The deviation is the numeric difference of the potentials on x.
    """
    tilde = seed_coefficients(spec)
    for j, c in enumerate(tilde):
        if c * (-1) ** j <= 0:
            raise InvariantViolation(
                "seed-sign", detail=f"c~_{j + 1} = {c} breaks the alternation"
            )

    seeds = [
        ExpSum({(k, 0): 1, (-k, 0): c}) for k, c in zip(spec.ks, tilde)
    ]
    w = expsum_wronskian(seeds)
    if w.is_zero:
        raise DegeneracyError("The exponential seeds are linearly dependent")

    kay = kay_moses(spec)
    vandermonde = _vandermonde(spec.ks)
    expected = kay.u * ExpSum.exponential(sum(spec.ks), 0, vandermonde)
    if w != expected:
        raise InvariantViolation(
            "wronskian-equivalence", residual=w - expected
        )

    darboux = _log_potential(w)
    if not darboux.equals(kay.potential):
        raise InvariantViolation(
            "wronskian-equivalence", detail="potentials differ"
        )

    plus, minus = plane_wave_factors(spec)
    expected_plus = Poly(1, IK, domain=QQ)
    expected_minus = Poly(1, IK, domain=QQ)
    for k in spec.ks:
        expected_plus *= Poly(IK - k, IK, domain=QQ)
        expected_minus *= Poly(IK + k, IK, domain=QQ)
    if plus != expected_plus or minus != expected_minus:
        raise InvariantViolation(
            "plane-wave-factors", detail=f"got {plus}, {minus}"
        )

    report = EquivalenceReport(tilde, vandermonde, plus, minus)
    if x is not None:
        report.deviation = float(
            np.max(np.abs(darboux.evaluate(x) - kay.potential.evaluate(x)))
        )
    return report


class KdvResult(NamedTuple):
    """
    The dressed potential U(x; t) and its KdV residual.  `exact` says
    whether the residual was cancelled in the ExpSum algebra.
    """

    potential: ExpRatio
    time: Rational
    exact: bool
    max_residual: float


def kdv_residual(potential: ExpRatio) -> ExpRatio:
    """
    U_t - 6 U U_x + U_xxx
    """
    u_x = potential.dx()
    return potential.dt() - potential * u_x * 6 + u_x.dx().dx()


def kdv_evolve(
    spec: ReflectionlessSpec,
    t,
    x: Optional[np.ndarray] = None,
) -> KdvResult:
    """
    Dresses c_j -> c_j e^(8 k_j^3 t) and checks the KdV equation: exactly
    up to EXACT_KDV_LIMIT solitons, on an x grid at time t beyond it.
    """
    t = Rational(t)
    potential = kay_moses(spec, dressed=True).potential

    if spec.size <= EXACT_KDV_LIMIT:
        residual = kdv_residual(potential)
        if not residual.is_zero:
            raise InvariantViolation(
                "kdv", residual=residual.numerator, detail="not cancelled"
            )
        return KdvResult(potential, t, True, 0.0)

    if x is None:
        x = np.linspace(*KDV_X_RANGE, KDV_POINTS)
    at = float(t)
    u_x = potential.dx()
    values = (
        potential.dt().evaluate(x, at)
        - 6 * potential.evaluate(x, at) * u_x.evaluate(x, at)
        + u_x.dx().dx().evaluate(x, at)
    )
    worst = float(np.max(np.abs(values)))
    if worst > KDV_NUMERIC:
        raise InvariantViolation("kdv", residual=worst, detail=f"t={t}")
    return KdvResult(potential, t, False, worst)


def special_soliton(size: int) -> ReflectionlessSpec:
    """
    k_j = j and c_j = (N+j)! / (j! (j-1)! (N-j)!), which give
    U = -N(N+1) / cosh^2 x.
    """
    if size < 1:
        raise UsageError(f"Soliton count must be positive, got {size}")
    ks = tuple(range(1, size + 1))
    cs = tuple(
        Rational(
            factorial(size + j),
            factorial(j) * factorial(j - 1) * factorial(size - j),
        )
        for j in ks
    )
    return ReflectionlessSpec(ks, cs)


def special_soliton_check(size: int) -> ReflectionlessSpec:
    """
    The special parameters reproduce -N(N+1)/cosh^2 x, and the integer-h
    soliton transmission reduces to the reflectionless one.
    """
    spec = special_soliton(size)
    strength = size * (size + 1)
    target = ExpRatio(
        ExpSum.exponential(-2, 0, -4 * strength),
        ExpSum.exponential(-2) + 1,
        2,
    )
    if not kay_moses(spec).potential.equals(target):
        raise InvariantViolation(
            "special-soliton", detail=f"N={size} is not -N(N+1)/cosh^2"
        )

    t_soliton, _ = soliton_amplitudes(size)
    t_reflectionless, _ = reflectionless_amplitudes(spec)
    simplified = t_soliton.simplified()
    if (
        not simplified.is_rational()
        or simplified.rational != t_reflectionless.rational
    ):
        raise InvariantViolation(
            "special-soliton",
            residual=simplified,
            detail="transmission differs from the reflectionless one",
        )
    return spec


class PositivityReport(NamedTuple):
    min_u: float
    max_potential: float


def positivity_check(spec: ReflectionlessSpec, x: np.ndarray):
    """
    u_N > 0 and U_N < 0 on the grid.
    """
    kay = kay_moses(spec)
    mantissa, _ = kay.u.evaluate_scaled(x)
    values = kay.potential.evaluate(x)
    report = PositivityReport(float(np.min(mantissa)), float(np.max(values)))
    if report.min_u <= 0:
        raise InvariantViolation("kay-moses-positivity", residual=report.min_u)
    if report.max_potential >= 0:
        raise InvariantViolation(
            "kay-moses-negativity", residual=report.max_potential
        )
    return report
