"""
Exact univariate polynomials and reduced rational functions over QQ.

ExactPoly is sympy's Poly with domain QQ; this module only adds the
constructors and conversions the rest of the package relies on, plus
RatFunc, a reduced num/den pair with a monic denominator.
"""

from functools import reduce
from typing import Sequence, Union

import numpy as np
from sympy import QQ, Poly, Rational, Symbol, igcd, ilcm, symbols

from solvableqm.errors import UsageError

X, ETA, Y, K = symbols("x eta y k")

VARIABLES = {"x": X, "eta": ETA, "y": Y, "k": K}

Scalar = Union[int, Rational]


def as_poly(value, var: Symbol = ETA) -> Poly:
    """
    Returns the value as a Poly over QQ in the given variable.  Polys that
    already exist keep their own variable.
    """
    if isinstance(value, Poly):
        if value.get_domain() != QQ:
            return Poly(value.as_expr(), *value.gens, domain=QQ)
        return value

    return Poly(value, var, domain=QQ)


def poly_from_coeffs(coeffs: Sequence, var: Symbol = ETA) -> Poly:
    """
    Builds a Poly from ascending coefficients c_0, c_1, ...
    """
    values = [Rational(c) for c in coeffs] or [Rational(0)]
    return Poly(list(reversed(values)), var, domain=QQ)


def coeffs_ascending(p: Poly) -> list:
    """
    Returns the coefficients of p from degree 0 upwards.  The zero
    polynomial gives [0].
    """
    return list(reversed(p.all_coeffs()))


def poly_to_float(p: Poly, values):
    """
    Evaluates p at float values (scalar or array) in double precision.
    """
    return np.polyval([float(c) for c in p.all_coeffs()], values)


def reflect(p: Poly) -> Poly:
    """
    Returns p(-v).
    """
    var = p.gen
    return p.compose(Poly(-var, var, domain=QQ))


def primitive_part(p: Poly) -> Poly:
    """
    p scaled to coprime integer coefficients with a positive leading
    coefficient.
    """
    if p.is_zero:
        return p
    coeffs = [Rational(c) for c in p.all_coeffs()]
    scale = Rational(
        reduce(ilcm, (c.q for c in coeffs), 1),
        reduce(igcd, (c.p for c in coeffs), 0),
    )
    if coeffs[0] < 0:
        scale = -scale
    return p * scale


class RatFunc:
    """
    A reduced rational function num/den: gcd(num, den) = 1 and den is
    monic.  Instances are immutable and compare by value.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var: Symbol = ETA):
        num = as_poly(num, var)
        den = as_poly(den, num.gen)

        if den.is_zero:
            raise UsageError("Rational function with zero denominator")

        if num.is_zero:
            den = Poly(1, num.gen, domain=QQ)
        elif den.degree() > 0:
            num, den = num.cancel(den, include=True)
            num, den = as_poly(num), as_poly(den)

        lc = den.LC()
        object.__setattr__(self, "num", num.mul_ground(1 / Rational(lc)))
        object.__setattr__(self, "den", den.monic())

    def __setattr__(self, key, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def gen(self) -> Symbol:
        """
        The variable of this function
        """
        return self.num.gen

    @classmethod
    def coerce(cls, value, var: Symbol = ETA) -> "RatFunc":
        """
        Lifts polynomials and scalars into RatFunc.
        """
        if isinstance(value, RatFunc):
            return value
        return cls(value, 1, var)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    @property
    def is_constant(self) -> bool:
        return self.is_polynomial and self.num.degree() <= 0

    def as_poly(self) -> Poly:
        """
        Returns the numerator, which must be the whole function.
        """
        if not self.is_polynomial:
            raise UsageError(f"{self} is not a polynomial")
        return self.num

    def constant_value(self) -> Rational:
        """
        Returns the value of a constant function.
        """
        if not self.is_constant:
            raise UsageError(f"{self} is not a constant")
        return Rational(self.num.LC()) if not self.is_zero else Rational(0)

    def diff(self) -> "RatFunc":
        num, den = self.num, self.den
        return RatFunc(num.diff() * den - num * den.diff(), den * den)

    def eval(self, value) -> Rational:
        """
        Exact evaluation at a rational point.
        """
        den = self.den.eval(value)
        if den == 0:
            raise UsageError(f"{self} has a pole at {value}")
        return Rational(self.num.eval(value)) / Rational(den)

    def to_float(self, values):
        """
        Evaluates at float values in double precision.
        """
        return poly_to_float(self.num, values) / poly_to_float(self.den, values)

    def _lift(self, other) -> "RatFunc":
        return RatFunc.coerce(other, self.gen)

    @staticmethod
    def _foreign(other) -> bool:
        return not isinstance(other, (RatFunc, Poly, int, Rational))

    def __add__(self, other):
        if self._foreign(other):
            return NotImplemented
        other = self._lift(other)
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        if self._foreign(other):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if self._foreign(other):
            return NotImplemented
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self._foreign(other):
            return NotImplemented
        other = self._lift(other)
        if other.is_zero:
            raise UsageError("Division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, power: int):
        if power < 0:
            return RatFunc(self.den**-power, self.num**-power)
        return RatFunc(self.num**power, self.den**power)

    def __eq__(self, other):
        if not isinstance(other, (RatFunc, Poly, int, Rational)):
            return NotImplemented
        other = self._lift(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        num, den = self.num.all_coeffs(), self.den.all_coeffs()
        return hash((tuple(num), tuple(den)))

    def __repr__(self):
        if self.is_polynomial:
            return f"RatFunc({self.num.as_expr()})"
        return f"RatFunc(({self.num.as_expr()})/({self.den.as_expr()}))"

    def __str__(self):
        if self.is_polynomial:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"
