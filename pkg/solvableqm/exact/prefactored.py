"""
Prefactored functions: a rational function in eta times an exponential of
a polynomial times powers of fixed linear boundary factors,

    f(eta) = R(eta) * exp(q(eta)) * prod_i l_i(eta)**a_i

Every eigenfunction, virtual and pseudo virtual state and Wronskian entry
of the solvable models has this shape, and the shape is closed under
d/deta, products and quotients.
"""

from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, Poly, Rational

from solvableqm.errors import UsageError

from .poly import ETA, RatFunc, as_poly, poly_to_float

# the named linear factors available to a factor basis
FACTORS: Dict[str, Poly] = {
    "eta": Poly(ETA, ETA, domain=QQ),
    "sin2": Poly((1 - ETA) / 2, ETA, domain=QQ),
    "cos2": Poly((1 + ETA) / 2, ETA, domain=QQ),
    "1-eta": Poly(1 - ETA, ETA, domain=QQ),
    "1+eta": Poly(1 + ETA, ETA, domain=QQ),
}

Basis = Tuple[str, ...]


def _factor(name: str) -> Poly:
    try:
        return FACTORS[name]
    except KeyError as exc:
        raise UsageError(f"Unknown boundary factor {name!r}") from exc


def _strip_factor(p: Poly, ell: Poly) -> Tuple[Poly, int]:
    """
    Divides ell out of p as often as possible.
    """
    count = 0
    while not p.is_zero and p.degree() > 0:
        quo, rem = p.div(ell)
        if not rem.is_zero:
            break
        p = quo
        count += 1
    return p, count


class PrefactoredFunction:
    """
    An immutable, canonical R * exp(q) * prod l_i**a_i.

    Canonical means R is reduced with a monic denominator and no basis
    factor divides its numerator or denominator; the zero function has
    q = 0 and all exponents 0.
    """

    __slots__ = ("ratfunc", "exp", "basis", "exponents")

    def __init__(
        self,
        ratfunc,
        exp=0,
        basis: Basis = (),
        exponents: Optional[Sequence] = None,
    ):
        ratfunc = RatFunc.coerce(ratfunc)
        exp = as_poly(exp)
        basis = tuple(basis)
        exps = [Rational(a) for a in (exponents or [0] * len(basis))]

        if len(exps) != len(basis):
            raise UsageError("One exponent is needed per basis factor")

        if ratfunc.is_zero:
            exp = Poly(0, ETA, domain=QQ)
            exps = [Rational(0)] * len(basis)
        else:
            num, den = ratfunc.num, ratfunc.den
            for i, name in enumerate(basis):
                ell = _factor(name)
                num, up = _strip_factor(num, ell)
                den, down = _strip_factor(den, ell)
                exps[i] += up - down
            ratfunc = RatFunc(num, den)

        object.__setattr__(self, "ratfunc", ratfunc)
        object.__setattr__(self, "exp", exp)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "exponents", tuple(exps))

    def __setattr__(self, key, value):
        raise AttributeError("PrefactoredFunction is immutable")

    @classmethod
    def constant(cls, value, basis: Basis = ()) -> "PrefactoredFunction":
        """
        Returns the constant function with the given basis
        """
        return cls(RatFunc(value), 0, basis)

    @property
    def is_zero(self) -> bool:
        return self.ratfunc.is_zero

    @property
    def poly(self) -> Poly:
        """
        The numerator polynomial of the rational part.
        """
        return self.ratfunc.num

    def prefactor(self) -> "PrefactoredFunction":
        """
        Returns exp(q) * prod l_i**a_i, i.e. this function with R = 1.
        """
        return PrefactoredFunction(1, self.exp, self.basis, self.exponents)

    def with_ratfunc(self, ratfunc) -> "PrefactoredFunction":
        """
        Returns a function with the same prefactor and a new rational part.
        """
        return PrefactoredFunction(
            ratfunc, self.exp, self.basis, self.exponents
        )

    def _check_basis(self, other: "PrefactoredFunction"):
        if self.basis != other.basis:
            raise UsageError(
                "incompatible factor bases: "
                f"{self.basis or '()'} vs {other.basis or '()'}"
            )

    def _lift(self, other) -> "PrefactoredFunction":
        if isinstance(other, PrefactoredFunction):
            self._check_basis(other)
            return other
        return PrefactoredFunction(
            RatFunc.coerce(other), 0, self.basis, [0] * len(self.basis)
        )

    def __mul__(self, other):
        other = self._lift(other)
        return PrefactoredFunction(
            self.ratfunc * other.ratfunc,
            self.exp + other.exp,
            self.basis,
            [a + b for a, b in zip(self.exponents, other.exponents)],
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other.is_zero:
            raise UsageError("Division by the zero function")
        return PrefactoredFunction(
            self.ratfunc / other.ratfunc,
            self.exp - other.exp,
            self.basis,
            [a - b for a, b in zip(self.exponents, other.exponents)],
        )

    def __pow__(self, power: int):
        if int(power) != power:
            raise UsageError("Only integer powers are closed")
        power = int(power)
        if power < 0 and self.is_zero:
            raise UsageError("Division by the zero function")
        return PrefactoredFunction(
            self.ratfunc**power,
            self.exp * power,
            self.basis,
            [a * power for a in self.exponents],
        )

    def __neg__(self):
        return self.with_ratfunc(-self.ratfunc)

    def __add__(self, other):
        other = self._lift(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.exp != other.exp:
            raise UsageError(
                "Cannot add functions with different exponential factors"
            )

        low, mine, theirs = [], RatFunc(1), RatFunc(1)
        for name, a, b in zip(self.basis, self.exponents, other.exponents):
            if not (a - b).is_integer:
                raise UsageError(
                    f"Exponents of {name} differ by a non-integer: {a}, {b}"
                )
            m = min(a, b)
            low.append(m)
            mine = mine * RatFunc(_factor(name)) ** int(a - m)
            theirs = theirs * RatFunc(_factor(name)) ** int(b - m)

        return PrefactoredFunction(
            self.ratfunc * mine + other.ratfunc * theirs,
            self.exp,
            self.basis,
            low,
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._lift(other))

    def diff(self) -> "PrefactoredFunction":
        """
        d/deta.  Each nonzero exponent drops by one.
        """
        if self.is_zero:
            return self

        active = [i for i, a in enumerate(self.exponents) if a != 0]
        lam = RatFunc(1)
        for i in active:
            lam = lam * RatFunc(_factor(self.basis[i]))

        r = self.ratfunc
        body = (r.diff() + r * RatFunc(self.exp.diff())) * lam
        for i in active:
            ell = _factor(self.basis[i])
            rest = lam / RatFunc(ell)
            body = body + r * rest * (self.exponents[i] * ell.diff().LC())

        exps = list(self.exponents)
        for i in active:
            exps[i] -= 1

        return PrefactoredFunction(body, self.exp, self.basis, exps)

    def diff_x(self, eta_prime: "PrefactoredFunction") -> "PrefactoredFunction":
        """
        d/dx = eta'(x) d/deta, with eta' given as a function of eta.
        """
        return eta_prime * self.diff()

    def to_ratfunc(self) -> RatFunc:
        """
        Returns the function as a RatFunc; the exponential part must be
        trivial and all exponents integers.
        """
        if self.is_zero:
            return RatFunc(0)
        if not self.exp.is_zero:
            raise UsageError("Function has an exponential factor")

        result = self.ratfunc
        for name, a in zip(self.basis, self.exponents):
            if not a.is_integer:
                raise UsageError(f"Non-integer exponent {a} of {name}")
            result = result * RatFunc(_factor(name)) ** int(a)

        return result

    def ratio(self, other) -> RatFunc:
        """
        self / other as a RatFunc.
        """
        return (self / self._lift(other)).to_ratfunc()

    def strip(self, prefactor: "PrefactoredFunction") -> Poly:
        """
        Divides out a prefactor and returns the remaining polynomial.
        """
        result = self.ratio(prefactor)
        if not result.is_polynomial:
            raise UsageError(
                "Function is not a polynomial multiple of the prefactor"
            )
        return result.num

    def proportionality(self, other) -> Optional[Rational]:
        """
        Returns c with self = c * other, or None if no such constant exists.
        """
        other = self._lift(other)
        if other.is_zero:
            return Rational(0) if self.is_zero else None
        try:
            result = self.ratio(other)
        except UsageError:
            return None
        if not result.is_constant:
            return None
        return result.constant_value()

    def __eq__(self, other):
        if not isinstance(other, PrefactoredFunction):
            return NotImplemented
        return (
            self.basis == other.basis
            and self.ratfunc == other.ratfunc
            and self.exp == other.exp
            and self.exponents == other.exponents
        )

    def __hash__(self):
        return hash((self.ratfunc, self.basis, self.exponents))

    def log_abs(self, eta):
        """
        Returns (log|f|, sign f) at float eta values.  Accumulating in the
        log domain keeps large exponential factors from overflowing.
        """
        eta = np.asarray(eta, dtype=float)
        num = poly_to_float(self.ratfunc.num, eta)
        den = poly_to_float(self.ratfunc.den, eta)

        with np.errstate(divide="ignore", invalid="ignore"):
            logs = np.log(np.abs(num)) - np.log(np.abs(den))
            logs = logs + poly_to_float(self.exp, eta)
            for name, a in zip(self.basis, self.exponents):
                if a != 0:
                    ell = poly_to_float(_factor(name), eta)
                    logs = logs + float(a) * np.log(np.abs(ell))

        return logs, np.sign(num) * np.sign(den)

    def evaluate(self, eta):
        """
        Double precision values at float eta.
        """
        logs, sign = self.log_abs(eta)
        with np.errstate(over="ignore", invalid="ignore"):
            return sign * np.exp(logs)

    def __repr__(self):
        parts = [f"({self.ratfunc})"]
        if not self.exp.is_zero:
            parts.append(f"exp({self.exp.as_expr()})")
        for name, a in zip(self.basis, self.exponents):
            if a != 0:
                parts.append(f"[{name}]^({a})")
        return "PF<" + " * ".join(parts) + ">"


def factor_basis_product(
    basis: Basis, exponents: Iterable
) -> PrefactoredFunction:
    """
    Returns prod l_i**a_i for the given basis.
    """
    return PrefactoredFunction(1, 0, basis, list(exponents))


def exponential(q, basis: Basis = ()) -> PrefactoredFunction:
    """
    Returns exp(q(eta)) with the given basis.
    """
    return PrefactoredFunction(1, q, basis)
