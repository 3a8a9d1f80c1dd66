"""
Linear differential operators sum_k c_k(v) (d/dv)**k with rational
function coefficients.
"""

from typing import Sequence, Union

from sympy import Poly, Rational, binomial
from sympy import Symbol

from solvableqm.errors import UsageError

from .poly import ETA, RatFunc

Applicable = Union[Poly, RatFunc]


def _nth_derivative(f: RatFunc, n: int) -> RatFunc:
    for _ in range(n):
        f = f.diff()
    return f


class DiffOp:
    """
    An immutable differential operator.  `a * b` is composition (apply b
    first), `a + b` the sum.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence, var: Symbol = ETA):
        values = [RatFunc.coerce(c, var) for c in coeffs]
        while values and values[-1].is_zero:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "var", var)

    def __setattr__(self, key, value):
        raise AttributeError("DiffOp is immutable")

    @classmethod
    def derivative(cls, order: int = 1, var: Symbol = ETA) -> "DiffOp":
        """
        Returns (d/dv)**order
        """
        return cls([0] * order + [1], var)

    @classmethod
    def multiplication(cls, f, var: Symbol = ETA) -> "DiffOp":
        """
        Returns the operator of multiplication by f
        """
        return cls([f], var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> RatFunc:
        """
        Coefficient of (d/dv)**k (zero beyond the order)
        """
        if k < len(self.coeffs):
            return self.coeffs[k]
        return RatFunc(0, 1, self.var)

    def _lift(self, other) -> "DiffOp":
        if isinstance(other, DiffOp):
            return other
        return DiffOp.multiplication(other, self.var)

    def __add__(self, other):
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return DiffOp(
            [self.coeff(k) + other.coeff(k) for k in range(size)], self.var
        )

    __radd__ = __add__

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, DiffOp):
            other = self._lift(other)
        return compose(self, other)

    def __rmul__(self, other):
        return compose(self._lift(other), self)

    def __pow__(self, power: int):
        if power < 0:
            raise UsageError("Negative powers of a differential operator")
        result = DiffOp([1], self.var)
        for _ in range(power):
            result = result * self
        return result

    def apply(self, f: Applicable) -> RatFunc:
        """
        Applies the operator to a polynomial or rational function.
        """
        f = RatFunc.coerce(f, self.var)
        result = RatFunc(0, 1, self.var)
        current = f
        for k, c in enumerate(self.coeffs):
            if k:
                current = current.diff()
            if not c.is_zero:
                result = result + c * current
        return result

    def apply_poly(self, p: Poly) -> Poly:
        """
        Applies the operator to a polynomial and insists on a polynomial
        result.
        """
        return self.apply(p).as_poly()

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c})*D^{k}" for k, c in enumerate(self.coeffs)]
        return "DiffOp[" + " + ".join(terms or ["0"]) + "]"


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """
    (a b) f = a(b f), expanded with the Leibniz rule.
    """
    if a.var != b.var:
        raise UsageError("Composing operators in different variables")

    size = len(a.coeffs) + len(b.coeffs) - 1
    if size <= 0:
        return DiffOp([], a.var)

    result = [RatFunc(0, 1, a.var) for _ in range(size)]
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b.coeffs):
            for m in range(i + 1):
                term = _nth_derivative(bj, m)
                if term.is_zero:
                    continue
                result[i - m + j] = result[i - m + j] + ai * term * Rational(
                    binomial(i, m)
                )

    return DiffOp(result, a.var)


def diffop_commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """
    [a, b] = ab - ba
    """
    return a * b - b * a


def polynomial_of(op: DiffOp, p: Poly) -> DiffOp:
    """
    Returns R(op) for a polynomial R, with powers of op composed on the right.
    """
    result = DiffOp([], op.var)
    power = DiffOp([1], op.var)
    coeffs = list(reversed(p.all_coeffs())) if not p.is_zero else []
    for c in coeffs:
        if c != 0:
            result = result + power * DiffOp([c], op.var)
        power = power * op
    return result
