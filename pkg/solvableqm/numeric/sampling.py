"""
Double precision samples of wavefunctions and potentials, node counting
and finite-difference Schrodinger residuals.
"""

from typing import Callable, List, NamedTuple, Optional, Sequence

import numpy as np

from solvableqm.darboux import SeedSpec, make_seed
from solvableqm.errors import UsageError
from solvableqm.exact import PrefactoredFunction, RatFunc, poly_to_float

from .grid import GridMapping, GridSpec
from .tolerances import MIN_NODE_SAMPLES, POLE_DISTANCE

Sampler = Callable[[np.ndarray], np.ndarray]


class Sample(NamedTuple):
    """
    One grid value; flagged samples sit on or next to a pole.
    """

    x: float
    value: float
    flagged: bool = False


def _flags(ratfunc: RatFunc, eta: np.ndarray, values: np.ndarray):
    den = np.abs(poly_to_float(ratfunc.den, eta))
    return (den < POLE_DISTANCE) | ~np.isfinite(values)


def function_sampler(fn: PrefactoredFunction, coord) -> Sampler:
    """
    x -> fn(eta(x)), accumulated in logs so large prefactors stay finite
    """

    def sample(x):
        return fn.evaluate(coord.eta_of_x(x))

    return sample


def ratfunc_sampler(ratfunc: RatFunc, coord) -> Sampler:
    def sample(x):
        with np.errstate(divide="ignore", invalid="ignore"):
            return ratfunc.to_float(coord.eta_of_x(x))

    return sample


def _level_function(system, n=None, seed=None) -> PrefactoredFunction:
    if (n is None) == (seed is None):
        raise UsageError("Sample either a level or a seed")
    if seed is None:
        return system.eigenfunction(n)
    if isinstance(seed, str):
        seed = SeedSpec.parse(seed)
    return make_seed(system, seed).fn


def sample_wavefunction(
    system,
    grid: GridSpec,
    n: Optional[int] = None,
    seed: Optional[SeedSpec] = None,
    warn: Optional[Callable[[str], None]] = None,
) -> List[Sample]:
    """
    Samples eigenfunction n, or a seed solution, of any system with a
    coordinate map.
    """
    fn = _level_function(system, n, seed)
    x = grid.x_points()
    eta = system.coord.eta_of_x(x)
    values = fn.evaluate(eta)
    flags = _flags(fn.ratfunc, eta, values)
    if flags.any() and warn is not None:
        warn(f"{int(flags.sum())} samples of {system} sit on a pole")
    return [
        Sample(float(a), float(v), bool(f))
        for a, v, f in zip(x, values, flags)
    ]


def sample_potential(system, grid: GridSpec) -> List[Sample]:
    """
    U(x), flagging poles of a deformed potential.
    """
    potential = system.potential()
    x = grid.x_points()
    eta = system.coord.eta_of_x(x)
    with np.errstate(divide="ignore", invalid="ignore"):
        values = potential.to_float(eta)
    flags = _flags(potential, eta, values)
    return [
        Sample(float(a), float(v), bool(f))
        for a, v, f in zip(x, values, flags)
    ]


def count_sign_changes(samples: Sequence[Sample]) -> int:
    """
    Strict sign alternations, skipping flagged samples and exact zeros.
    """
    if len(samples) < MIN_NODE_SAMPLES:
        raise UsageError(
            f"Node counting needs {MIN_NODE_SAMPLES} samples, "
            f"got {len(samples)}"
        )
    changes = 0
    previous = 0.0
    for sample in samples:
        if sample.flagged or sample.value == 0 or np.isnan(sample.value):
            continue
        if previous != 0 and (sample.value > 0) != (previous > 0):
            changes += 1
        previous = sample.value
    return changes


def fd_schrodinger_residual(
    potential: Sampler,
    wavefunction: Sampler,
    energy: float,
    grid: GridSpec,
) -> float:
    """
    max |-psi'' + (U - E) psi| / max |psi| over the interior of a uniform
    grid, with the five-point second difference.
    """
    if grid.mapping != GridMapping.LINEAR:
        raise UsageError("Finite differences need a uniform grid")
    step = grid.step
    x = grid.x_points()
    psi = wavefunction(x)

    second = (
        -psi[4:] + 16 * psi[3:-1] - 30 * psi[2:-2] + 16 * psi[1:-3] - psi[:-4]
    ) / (12 * step * step)
    inner = x[2:-2]
    residual = -second + (potential(inner) - energy) * psi[2:-2]

    scale = float(np.max(np.abs(psi)))
    if scale == 0:
        raise UsageError("The wavefunction vanishes on the grid")
    return float(np.max(np.abs(residual))) / scale


def system_residual(
    system, n: int, grid: GridSpec, energy: Optional[float] = None
) -> float:
    """
    fd_schrodinger_residual for level n of a base or deformed system
    """
    if energy is None:
        energy = float(system.energy(n))
    return fd_schrodinger_residual(
        ratfunc_sampler(system.potential(), system.coord),
        function_sampler(system.eigenfunction(n), system.coord),
        energy,
        grid,
    )


def fd_convergence_ratio(
    system, n: int, a: float, b: float, step: float
) -> float:
    """
    Residual at `step` over the residual at step/2; fourth order
    differences give about 16 while truncation dominates.
    """
    coarse = system_residual(system, n, GridSpec.uniform(a, b, step))
    fine = system_residual(system, n, GridSpec.uniform(a, b, step / 2))
    return coarse / fine
