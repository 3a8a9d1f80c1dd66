"""
Finite sums of exponentials sum c * exp(mu x + nu t) with rational c, mu
and nu, closed under +, *, d/dx and d/dt.  Equality is exact, so identities
between reflectionless potentials reduce to comparing dictionaries.
"""

from typing import Dict, Mapping, Sequence, Tuple

import numpy as np
from sympy import Rational

from solvableqm.errors import UsageError

Exponent = Tuple[Rational, Rational]


class ExpSum:
    """
    sum_(mu, nu) c exp(mu x + nu t); zero coefficients are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] = None):
        clean: Dict[Exponent, Rational] = {}
        for (mu, nu), c in (terms or {}).items():
            c = Rational(c)
            if c != 0:
                clean[(Rational(mu), Rational(nu))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, key, value):
        raise AttributeError("ExpSum is immutable")

    @classmethod
    def constant(cls, c) -> "ExpSum":
        return cls({(0, 0): c})

    @classmethod
    def exponential(cls, mu, nu=0, c=1) -> "ExpSum":
        return cls({(mu, nu): c})

    @classmethod
    def coerce(cls, value) -> "ExpSum":
        if isinstance(value, ExpSum):
            return value
        return cls.constant(value)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        other = ExpSum.coerce(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return ExpSum(terms)

    __radd__ = __add__

    def __neg__(self):
        return ExpSum({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + -ExpSum.coerce(other)

    def __rsub__(self, other):
        return ExpSum.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, ExpSum):
            c = Rational(other)
            return ExpSum({key: c * v for key, v in self.terms.items()})

        terms: Dict[Exponent, Rational] = {}
        for (mu1, nu1), c1 in self.terms.items():
            for (mu2, nu2), c2 in other.terms.items():
                key = (mu1 + mu2, nu1 + nu2)
                terms[key] = terms.get(key, 0) + c1 * c2
        return ExpSum(terms)

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise UsageError("ExpSum powers must be non-negative")
        result = ExpSum.constant(1)
        for _ in range(power):
            result = result * self
        return result

    def dx(self) -> "ExpSum":
        return ExpSum({(mu, nu): mu * c for (mu, nu), c in self.terms.items()})

    def dt(self) -> "ExpSum":
        return ExpSum({(mu, nu): nu * c for (mu, nu), c in self.terms.items()})

    def at_time_zero(self) -> "ExpSum":
        """
        Drops the t dependence by evaluating at t = 0.
        """
        terms: Dict[Exponent, Rational] = {}
        for (mu, _), c in self.terms.items():
            terms[(mu, 0)] = terms.get((mu, 0), 0) + c
        return ExpSum(terms)

    def coefficient(self, mu, nu=0) -> Rational:
        return self.terms.get((Rational(mu), Rational(nu)), Rational(0))

    def evaluate_scaled(self, x, t: float = 0.0):
        """
        Returns (mantissa, log_scale) with value = mantissa * exp(log_scale),
        taking the largest exponent out per point.
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if self.is_zero:
            return np.zeros_like(x), np.zeros_like(x)

        keys = list(self.terms)
        exps = np.array(
            [float(mu) * x + float(nu) * t for mu, nu in keys]
        )
        scale = exps.max(axis=0)
        coeffs = np.array([float(self.terms[k]) for k in keys])
        mantissa = (coeffs[:, None] * np.exp(exps - scale)).sum(axis=0)
        return mantissa, scale

    def evaluate(self, x, t: float = 0.0):
        mantissa, scale = self.evaluate_scaled(x, t)
        with np.errstate(over="ignore"):
            return mantissa * np.exp(scale)

    def __eq__(self, other):
        if isinstance(other, ExpSum):
            return self.terms == other.terms
        try:
            return self == ExpSum.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if self.is_zero:
            return "ExpSum(0)"
        parts = []
        for (mu, nu), c in sorted(self.terms.items()):
            exponent = f"{mu}x" + (f" + {nu}t" if nu != 0 else "")
            parts.append(f"{c}*e^({exponent})")
        return "ExpSum(" + " + ".join(parts) + ")"


def expsum_det(matrix: Sequence[Sequence[ExpSum]]) -> ExpSum:
    """
    Determinant by expansion along the first row.
    """
    size = len(matrix)
    if size == 0:
        return ExpSum.constant(1)
    if size == 1:
        return ExpSum.coerce(matrix[0][0])

    result = ExpSum()
    for col in range(size):
        entry = ExpSum.coerce(matrix[0][col])
        if entry.is_zero:
            continue
        minor = [row[:col] + row[col + 1 :] for row in matrix[1:]]
        term = entry * expsum_det(minor)
        result = result + term if col % 2 == 0 else result - term
    return result


def expsum_wronskian(fs: Sequence[ExpSum]) -> ExpSum:
    """
    W[f_1..f_n] in x
    """
    rows = []
    current = [ExpSum.coerce(f) for f in fs]
    for _ in range(len(fs)):
        rows.append(current)
        current = [f.dx() for f in current]
    return expsum_det(rows)


class ExpRatio:
    """
    numerator / base**power for a fixed ExpSum base.  Keeping the base
    fixed keeps derivatives inside the algebra: d/dx (N / u^p) is
    (N' u - p N u') / u^(p+1).
    """

    __slots__ = ("numerator", "base", "power")

    def __init__(self, numerator: ExpSum, base: ExpSum, power: int):
        if base.is_zero:
            raise UsageError("ExpRatio with a vanishing base")
        self.numerator = ExpSum.coerce(numerator)
        self.base = base
        self.power = power

    def _check(self, other: "ExpRatio"):
        if self.base != other.base:
            raise UsageError("ExpRatios over different bases do not combine")

    def raised(self, power: int) -> "ExpRatio":
        """
        The same function written over base**power, power >= self.power.
        """
        if power < self.power:
            raise UsageError("Cannot lower an ExpRatio's power")
        extra = self.base ** (power - self.power)
        return ExpRatio(self.numerator * extra, self.base, power)

    def __add__(self, other: "ExpRatio"):
        self._check(other)
        power = max(self.power, other.power)
        a, b = self.raised(power), other.raised(power)
        return ExpRatio(a.numerator + b.numerator, self.base, power)

    def __neg__(self):
        return ExpRatio(-self.numerator, self.base, self.power)

    def __sub__(self, other: "ExpRatio"):
        return self + -other

    def __mul__(self, other):
        if isinstance(other, ExpRatio):
            self._check(other)
            return ExpRatio(
                self.numerator * other.numerator,
                self.base,
                self.power + other.power,
            )
        return ExpRatio(self.numerator * other, self.base, self.power)

    __rmul__ = __mul__

    def dx(self) -> "ExpRatio":
        numerator = (
            self.numerator.dx() * self.base
            - self.numerator * self.base.dx() * self.power
        )
        return ExpRatio(numerator, self.base, self.power + 1)

    def dt(self) -> "ExpRatio":
        numerator = (
            self.numerator.dt() * self.base
            - self.numerator * self.base.dt() * self.power
        )
        return ExpRatio(numerator, self.base, self.power + 1)

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def equals(self, other: "ExpRatio") -> bool:
        """
        Exact equality by cross multiplication; bases may differ.
        """
        lhs = self.numerator * other.base**other.power
        rhs = other.numerator * self.base**self.power
        return lhs == rhs

    def evaluate(self, x, t: float = 0.0):
        num, num_scale = self.numerator.evaluate_scaled(x, t)
        den, den_scale = self.base.evaluate_scaled(x, t)
        with np.errstate(over="ignore", invalid="ignore"):
            return (num / den**self.power) * np.exp(
                num_scale - self.power * den_scale
            )

    def __repr__(self):
        return f"ExpRatio({self.numerator!r} / ({self.base!r})^{self.power})"
