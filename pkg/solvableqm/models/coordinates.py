"""
Sinusoidal coordinates eta(x).  All x-calculus goes through eta'(x)**2 and
eta''(x) written as polynomials in eta, and through eta'(x) as a
prefactored function of eta.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from sympy import QQ, Poly, Rational

from solvableqm.exact import ETA, PrefactoredFunction

Interval = Tuple[Optional[Rational], Optional[Rational]]


@dataclass(frozen=True)
class SinusoidalMap:
    """
    eta(x) for one model, with its derivatives expressed in eta.
    """

    tag: str
    eta_prime_squared: Poly
    eta_double_prime: Poly
    eta_interval: Interval
    x_interval: Tuple[float, float]
    basis: Tuple[str, ...]
    eta_prime: PrefactoredFunction
    eta_of_x: Callable

    def dx(self, f: PrefactoredFunction) -> PrefactoredFunction:
        """
        d/dx of a function of eta
        """
        return f.diff_x(self.eta_prime)


def _poly(expr) -> Poly:
    return Poly(expr, ETA, domain=QQ)


HERMITE_MAP = SinusoidalMap(
    tag="x",
    eta_prime_squared=_poly(1),
    eta_double_prime=_poly(0),
    eta_interval=(None, None),
    x_interval=(-np.inf, np.inf),
    basis=(),
    eta_prime=PrefactoredFunction(1),
    eta_of_x=lambda x: np.asarray(x, dtype=float),
)

RADIAL_MAP = SinusoidalMap(
    tag="x^2",
    eta_prime_squared=_poly(4 * ETA),
    eta_double_prime=_poly(2),
    eta_interval=(Rational(0), None),
    x_interval=(0.0, np.inf),
    basis=("eta",),
    # 2x = 2 eta^(1/2)
    eta_prime=PrefactoredFunction(2, 0, ("eta",), [Rational(1, 2)]),
    eta_of_x=lambda x: np.asarray(x, dtype=float) ** 2,
)

TRIGONOMETRIC_MAP = SinusoidalMap(
    tag="cos 2x",
    eta_prime_squared=_poly(4 * (1 - ETA**2)),
    eta_double_prime=_poly(-4 * ETA),
    eta_interval=(Rational(-1), Rational(1)),
    x_interval=(0.0, np.pi / 2),
    # sin^2 x = (1 - eta)/2, cos^2 x = (1 + eta)/2
    basis=("sin2", "cos2"),
    eta_prime=PrefactoredFunction(
        -4, 0, ("sin2", "cos2"), [Rational(1, 2), Rational(1, 2)]
    ),
    eta_of_x=lambda x: np.cos(2 * np.asarray(x, dtype=float)),
)

HYPERBOLIC_MAP = SinusoidalMap(
    tag="tanh x",
    eta_prime_squared=_poly((1 - ETA**2) ** 2),
    eta_double_prime=_poly(-2 * ETA * (1 - ETA**2)),
    eta_interval=(Rational(-1), Rational(1)),
    x_interval=(-np.inf, np.inf),
    basis=("1-eta", "1+eta"),
    eta_prime=PrefactoredFunction(1, 0, ("1-eta", "1+eta"), [1, 1]),
    eta_of_x=lambda x: np.tanh(np.asarray(x, dtype=float)),
)
