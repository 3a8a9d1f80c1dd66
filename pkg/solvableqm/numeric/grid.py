"""
Sampling and integration grids over the x interval of a system.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from solvableqm.errors import UsageError

from .tolerances import MIN_GRID_POINTS


class GridMapping(Enum):
    """
    How the unit parameter u maps onto x
    """

    LINEAR = "linear"
    TANH = "tanh"
    EXP = "exp"


@dataclass(frozen=True)
class GridSpec:
    """
    An x interval with a point count and a mapping from u.  Infinite
    intervals use x = scale artanh(u) on (-1, 1), half-infinite ones
    x = a - scale log(1 - u) on [0, 1).
    """

    interval: Tuple[float, float]
    points: int = 1024
    mapping: GridMapping = GridMapping.LINEAR
    scale: float = 3.0

    def __post_init__(self):
        a, b = (float(v) for v in self.interval)
        object.__setattr__(self, "interval", (a, b))

        if self.points < MIN_GRID_POINTS:
            raise UsageError(
                f"Grids need at least {MIN_GRID_POINTS} points, "
                f"got {self.points}"
            )
        if not a < b:
            raise UsageError(f"Empty interval ({a}, {b})")

        expected = _mapping_for(a, b)
        if expected is None:
            raise UsageError(f"Unsupported interval ({a}, {b})")
        if self.mapping != expected:
            raise UsageError(
                f"Interval ({a}, {b}) needs the {expected.value} mapping, "
                f"not {self.mapping.value}"
            )

    @classmethod
    def for_interval(
        cls, interval: Tuple[float, float], points: int = 1024, scale=3.0
    ) -> "GridSpec":
        a, b = (float(v) for v in interval)
        return cls((a, b), points, _mapping_for(a, b), scale)

    @classmethod
    def uniform(cls, a: float, b: float, step: float) -> "GridSpec":
        """
        A linear grid on [a, b] with the given spacing, ends excluded.
        """
        return cls((a, b), int(round((b - a) / step)) - 1)

    @classmethod
    def for_system(
        cls,
        system,
        points: int = 1024,
        window: Optional[Tuple[float, float]] = None,
    ) -> "GridSpec":
        """
        The system's own x interval, or a finite window of it.
        """
        if window is not None:
            return cls(window, points)
        return cls.for_interval(system.coord.x_interval, points)

    @property
    def step(self) -> float:
        """
        Spacing of the uniform grid; only linear grids have one.
        """
        if self.mapping != GridMapping.LINEAR:
            raise UsageError("Only linear grids have a uniform step")
        a, b = self.interval
        return (b - a) / (self.points + 1)

    def u_range(self) -> Tuple[float, float]:
        if self.mapping == GridMapping.TANH:
            return -1.0, 1.0
        return 0.0, 1.0

    def x_of_u(self, u):
        u = np.asarray(u, dtype=float)
        a, b = self.interval
        if self.mapping == GridMapping.LINEAR:
            return a + (b - a) * u
        if self.mapping == GridMapping.TANH:
            return self.scale * np.arctanh(u)
        return a - self.scale * np.log1p(-u)

    def jacobian(self, u):
        """
        dx/du
        """
        u = np.asarray(u, dtype=float)
        a, b = self.interval
        if self.mapping == GridMapping.LINEAR:
            return np.full_like(u, b - a)
        if self.mapping == GridMapping.TANH:
            return self.scale / (1 - u * u)
        return self.scale / (1 - u)

    def x_points(self) -> np.ndarray:
        """
        Interior sample points, uniform in u; the interval ends are never
        sampled.
        """
        lo, hi = self.u_range()
        u = np.linspace(lo, hi, self.points + 2)[1:-1]
        return self.x_of_u(u)


def _mapping_for(a: float, b: float) -> Optional[GridMapping]:
    if np.isfinite(a) and np.isfinite(b):
        return GridMapping.LINEAR
    if a == -np.inf and b == np.inf:
        return GridMapping.TANH
    if np.isfinite(a) and b == np.inf:
        return GridMapping.EXP
    return None
