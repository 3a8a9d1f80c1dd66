"""
The classical Hermite, Laguerre and Jacobi polynomials, built from their
terminating hypergeometric sums, together with exact recurrence,
differential-equation and Rodrigues cross-checks.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

from sympy import QQ, Poly, Rational, Symbol, factorial, rf

from .errors import DomainError, InvariantViolation, UsageError
from .exact import (
    ETA,
    X,
    PrefactoredFunction,
    as_poly,
    poly_from_coeffs,
)


class FamilyKind(Enum):
    """
    Enum for the classical families
    """

    hermite = "Hermite"
    laguerre = "Laguerre"
    jacobi = "Jacobi"


@dataclass(frozen=True)
class FamilyId:
    """
    A classical family with its parameters.
    """

    kind: FamilyKind
    alpha: Optional[Rational] = None
    beta: Optional[Rational] = None

    @classmethod
    def hermite(cls) -> "FamilyId":
        return cls(FamilyKind.hermite)

    @classmethod
    def laguerre(cls, alpha) -> "FamilyId":
        return cls(FamilyKind.laguerre, Rational(alpha))

    @classmethod
    def jacobi(cls, alpha, beta) -> "FamilyId":
        return cls(FamilyKind.jacobi, Rational(alpha), Rational(beta))

    def validate(self):
        """
        Checks weight integrability: alpha, beta > -1.
        """
        for name in ("alpha", "beta"):
            value = getattr(self, name)
            if value is not None and value <= -1:
                raise DomainError(
                    f"{self.kind.value} parameter {name}={value} must be > -1"
                )
        if self.kind == FamilyKind.laguerre and self.alpha is None:
            raise UsageError("Laguerre needs alpha")
        if self.kind == FamilyKind.jacobi and (
            self.alpha is None or self.beta is None
        ):
            raise UsageError("Jacobi needs alpha and beta")


class RecurrenceCoeffs(NamedTuple):
    """
    eta P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1}
    """

    A: Rational
    B: Rational
    C: Rational


def _check_degree(n: int):
    if n < 0:
        raise DomainError(f"Degree must be non-negative, got {n}")


def hermite(n: int, var: Symbol = ETA) -> Poly:
    """
    H_n = (2x)^n 2F0(-n/2, -(n-1)/2; ; -1/x^2)
    """
    _check_degree(n)
    coeffs = [Rational(0)] * (n + 1)
    a, b = Rational(-n, 2), Rational(-(n - 1), 2)
    for k in range(n // 2 + 1):
        term = rf(a, k) * rf(b, k) / factorial(k) * (-1) ** k * 2**n
        coeffs[n - 2 * k] = Rational(term)
    return poly_from_coeffs(coeffs, var)


def laguerre(n: int, alpha, var: Symbol = ETA) -> Poly:
    """
    L_n^(alpha) = (alpha+1)_n / n! 1F1(-n; alpha+1; x).  The ratio
    (alpha+1)_n / (alpha+1)_k is expanded as (alpha+k+1)_(n-k), which keeps
    the sum finite for any rational alpha.
    """
    _check_degree(n)
    alpha = Rational(alpha)
    coeffs = [
        Rational(rf(-n, k) * rf(alpha + k + 1, n - k))
        / (factorial(k) * factorial(n))
        for k in range(n + 1)
    ]
    return poly_from_coeffs(coeffs, var)


def jacobi(n: int, alpha, beta, var: Symbol = ETA) -> Poly:
    """
    P_n^(alpha,beta) = (alpha+1)_n / n! 2F1(-n, n+alpha+beta+1; alpha+1;
    (1-x)/2), expanded the same way as the Laguerre sum.
    """
    _check_degree(n)
    alpha, beta = Rational(alpha), Rational(beta)
    half = Poly((1 - var) / 2, var, domain=QQ)
    result = Poly(0, var, domain=QQ)
    for k in range(n + 1):
        c = (
            rf(-n, k)
            * rf(n + alpha + beta + 1, k)
            * rf(alpha + k + 1, n - k)
            / (factorial(k) * factorial(n))
        )
        result = result + half**k * Poly(Rational(c), var, domain=QQ)
    return result


def twisted_hermite(n: int, var: Symbol = ETA) -> Poly:
    """
    i^-n H_n(i x): real coefficients c_j (-1)^((n-j)/2), all positive.
    """
    base = hermite(n, var)
    coeffs = list(reversed(base.all_coeffs()))
    twisted = [
        c * (-1) ** ((n - j) // 2) if (n - j) % 2 == 0 else 0
        for j, c in enumerate(coeffs)
    ]
    return poly_from_coeffs(twisted, var)


def classical_poly(family: FamilyId, n: int, var: Symbol = X) -> Poly:
    """
    The degree-n polynomial of a family in its standard normalization.
    """
    family.validate()
    if family.kind == FamilyKind.hermite:
        return hermite(n, var)
    if family.kind == FamilyKind.laguerre:
        return laguerre(n, family.alpha, var)
    return jacobi(n, family.alpha, family.beta, var)


def diffeq_operator_residual(family: FamilyId, p: Poly, n: int) -> Poly:
    """
    Applies the family's second order operator plus its eigenvalue term.
    """
    var = p.gen
    x = Poly(var, var, domain=QQ)
    d1, d2 = p.diff(), p.diff().diff()

    if family.kind == FamilyKind.hermite:
        return d2 - x * d1 * 2 + p * (2 * n)

    if family.kind == FamilyKind.laguerre:
        return x * d2 + (-x + (family.alpha + 1)) * d1 + p * n

    a, b = family.alpha, family.beta
    return (
        (-(x**2) + 1) * d2
        + (x * (-(a + b + 2)) + (b - a)) * d1
        + p * (n * (n + a + b + 1))
    )


def diffeq_residual(family: FamilyId, n: int, var: Symbol = X) -> Poly:
    """
    The residual of the family's differential equation on P_n, which is
    the zero polynomial.
    """
    return diffeq_operator_residual(family, classical_poly(family, n, var), n)


def _rodrigues_eta(family: FamilyId, n: int) -> Poly:
    """
    Evaluates the Rodrigues formula in the prefactored algebra.
    """
    if family.kind == FamilyKind.hermite:
        eta2 = Poly(ETA**2, ETA, domain=QQ)
        f = PrefactoredFunction(1, -eta2)
        for _ in range(n):
            f = f.diff()
        return f.strip(PrefactoredFunction(1, -eta2)) * (-1) ** n

    if family.kind == FamilyKind.laguerre:
        a = family.alpha
        basis = ("eta",)
        f = PrefactoredFunction(1, -Poly(ETA, ETA, domain=QQ), basis, [n + a])
        for _ in range(n):
            f = f.diff()
        weight = PrefactoredFunction(
            1, -Poly(ETA, ETA, domain=QQ), basis, [a]
        )
        return f.strip(weight) * (Rational(1) / factorial(n))

    a, b = family.alpha, family.beta
    basis = ("1-eta", "1+eta")
    f = PrefactoredFunction(1, 0, basis, [n + a, n + b])
    for _ in range(n):
        f = f.diff()
    weight = PrefactoredFunction(1, 0, basis, [a, b])
    return f.strip(weight) * (Rational((-1) ** n) / (2**n * factorial(n)))


def rodrigues_poly(
    family: FamilyId, n: int, var: Symbol = X
) -> Tuple[Poly, Rational]:
    """
    Returns the Rodrigues-formula polynomial and the constant c with
    rodrigues = c * classical_poly.  A non-proportional result raises.
    """
    family.validate()
    _check_degree(n)

    rod = as_poly(_rodrigues_eta(family, n)).replace(ETA, var)
    cls = classical_poly(family, n, var)

    ratio = Rational(rod.LC()) / Rational(cls.LC())
    residual = rod - cls * ratio
    if not residual.is_zero:
        raise InvariantViolation(
            f"Rodrigues formula for {family.kind.value} n={n}",
            residual.as_expr(),
            "not proportional to the hypergeometric polynomial",
        )

    return rod, ratio


def division_recurrence(p_prev, p_n: Poly, p_next: Poly) -> RecurrenceCoeffs:
    """
    Solves v P_n = A P_{n+1} + B P_n + C P_{n-1} by exact division;
    p_prev is None at n = 0.
    """
    var = p_n.gen
    n = p_n.degree()
    rest = Poly(var, var, domain=QQ) * p_n

    A = Rational(rest.LC()) / Rational(p_next.LC())
    rest = rest - p_next * A

    B = Rational(rest.coeff_monomial(var**n)) / Rational(p_n.LC())
    rest = rest - p_n * B

    C = Rational(0)
    if p_prev is not None and not rest.is_zero:
        C = Rational(rest.LC()) / Rational(p_prev.LC())
        rest = rest - p_prev * C

    if not rest.is_zero:
        raise InvariantViolation(
            f"three term recurrence at n={n}", rest.as_expr()
        )

    return RecurrenceCoeffs(A, B, C)


def tabulated_recurrence(family: FamilyId, n: int) -> RecurrenceCoeffs:
    """
    Closed-form recurrence coefficients, used as a cross-check of the
    division oracle.
    """
    if family.kind == FamilyKind.hermite:
        return RecurrenceCoeffs(Rational(1, 2), Rational(0), Rational(n))

    if family.kind == FamilyKind.laguerre:
        a = family.alpha
        return RecurrenceCoeffs(
            Rational(-(n + 1)), 2 * n + a + 1, -(n + a) if n else Rational(0)
        )

    a, b = family.alpha, family.beta
    s = 2 * n + a + b
    if n == 0:
        A = 2 / (a + b + 2)
        B = (b - a) / (a + b + 2)
        C = Rational(0)
    else:
        A = 2 * (n + 1) * (n + a + b + 1) / ((s + 1) * (s + 2))
        B = (b**2 - a**2) / (s * (s + 2))
        C = 2 * (n + a) * (n + b) / (s * (s + 1))
    return RecurrenceCoeffs(Rational(A), Rational(B), Rational(C))


def recurrence_coeffs(family: FamilyId, n: int) -> RecurrenceCoeffs:
    """
    (A_n, B_n, C_n) from the division oracle, cross-checked against the
    closed forms.
    """
    family.validate()
    _check_degree(n)

    p_prev = classical_poly(family, n - 1) if n else None
    oracle = division_recurrence(
        p_prev, classical_poly(family, n), classical_poly(family, n + 1)
    )

    expected = tabulated_recurrence(family, n)
    if oracle != expected:
        raise InvariantViolation(
            f"{family.kind.value} recurrence closed form at n={n}",
            detail=f"oracle {tuple(oracle)} vs closed form {tuple(expected)}",
        )

    return oracle
