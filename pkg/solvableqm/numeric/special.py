"""
Complex log gamma and the closed form norm values built on it.
"""

import math

import numpy as np
from scipy import special

from solvableqm.errors import PoleError
from solvableqm.models import NormDescriptor, NormTag

from .tolerances import POLE_DISTANCE


def pole_distance(z: complex) -> float:
    """
    Distance from z to the nearest pole of Gamma, or inf for Re z > 0.5.
    """
    z = complex(z)
    if z.real > 0.5:
        return math.inf
    nearest = min(0.0, float(round(z.real)))
    return abs(z - nearest)


def log_gamma_complex(z: complex) -> complex:
    """
    The principal branch of log Gamma(z).
    """
    distance = pole_distance(z)
    if distance < POLE_DISTANCE:
        raise PoleError(f"log Gamma has a pole at {z}", distance)
    return complex(special.loggamma(complex(z)))


def reflection_residual(z: complex) -> float:
    """
    |Gamma(z) Gamma(1-z) sin(pi z) / pi - 1|
    """
    z = complex(z)
    total = log_gamma_complex(z) + log_gamma_complex(1 - z)
    value = np.exp(total) * np.sin(np.pi * z) / np.pi
    return abs(value - 1)


def recurrence_residual(z: complex) -> float:
    """
    |log Gamma(z+1) - log Gamma(z) - log z| modulo 2 pi i
    """
    z = complex(z)
    diff = log_gamma_complex(z + 1) - log_gamma_complex(z) - np.log(z)
    # the principal branches may differ by a multiple of 2 pi i
    turns = round(diff.imag / (2 * np.pi))
    return abs(diff - 2j * np.pi * turns)


def norm_value(norm: NormDescriptor) -> float:
    """
    A closed form norm in double precision.
    """
    value = float(norm.rational)
    if norm.tag == NormTag.SQRT_PI:
        return value * math.sqrt(math.pi)
    if norm.tag == NormTag.GAMMA:
        logs = sum(special.gammaln(float(a)) for a in norm.gamma_num)
        logs -= sum(special.gammaln(float(a)) for a in norm.gamma_den)
        return value * math.exp(logs)
    return value
