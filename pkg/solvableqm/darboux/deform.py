"""
The multi-step Darboux engine with its Crum and Krein-Adler
specializations.

A deformation by seeds phi~_1..phi~_M has U^(M) = U - 2 d^2/dx^2 log|W|
with W = W[phi~_1, ..., phi~_M] the x Wronskian, and eigenfunctions
W[phi~_1, ..., phi~_M, phi_n] / W.  Everything stays in the prefactored
algebra: log derivatives are never formed, only W'' W - W'^2.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import Poly, Rational

from solvableqm.errors import (
    DegeneracyError,
    DomainError,
    InvariantViolation,
    UsageError,
)
from solvableqm.exact import (
    PrefactoredFunction,
    RatFunc,
    prefactored_wronskian,
    primitive_part,
    real_root_count,
)
from solvableqm.models import ModelParams, ModelSystem

from .seeds import SeedClass, SeedFunction, SeedKind, SeedSpec, make_seed


@dataclass(frozen=True)
class NonsingularVerdict:
    """
    The Sturm verdict on the denominator polynomial
    """

    nonsingular: bool
    root_count: int
    denominator: Poly


@dataclass
class DeformedSystem:
    """
    A base system deformed by an ordered list of seeds.
    """

    base: ModelSystem
    seeds: Tuple[SeedFunction, ...]
    wronskian: PrefactoredFunction
    potential_delta: RatFunc
    shifted_params: Optional[ModelParams] = None
    deleted: Tuple[int, ...] = ()
    unsafe: bool = False

    def __repr__(self):
        seeds = ", ".join(str(s.spec) for s in self.seeds)
        return f"DeformedSystem({self.base!r}; {seeds})"

    @property
    def coord(self):
        return self.base.coord

    @property
    def seed_functions(self) -> List[PrefactoredFunction]:
        return [s.fn for s in self.seeds]

    def potential(self) -> RatFunc:
        """
        U + delta U as a rational function of eta
        """
        return self.base.potential() + self.potential_delta

    def denominator(self) -> Poly:
        """
        The Wronskian with its prefactor stripped.
        """
        return self.wronskian.ratfunc.num

    def energy(self, n: int) -> Rational:
        if n in self.deleted:
            raise DomainError(f"Level {n} was deleted from {self}")
        return self.base.energy(n)

    def _wronskian(self, fs: Sequence[PrefactoredFunction]):
        if not fs:
            return PrefactoredFunction.constant(1, self.base.basis)
        return prefactored_wronskian(fs, "x", self.coord.eta_prime)

    def eigenfunction(self, n: int) -> PrefactoredFunction:
        """
        W[seeds, phi_n] / W[seeds]
        """
        phi_n = self.base.eigenfunction(n)
        if n in self.deleted:
            raise DomainError(f"Level {n} was deleted from {self}")
        numerator = self._wronskian(self.seed_functions + [phi_n])
        return numerator / self.wronskian

    def extra_eigenfunction(self, j: int) -> PrefactoredFunction:
        """
        W[seeds without seed j] / W[seeds], the state added by a pseudo
        virtual seed at its own energy.
        """
        if not 0 <= j < len(self.seeds):
            raise UsageError(f"No seed {j} in {self}")
        if self.seeds[j].classification != SeedClass.PSEUDO:
            raise UsageError(
                f"Seed {self.seeds[j].spec} is not pseudo virtual; "
                "it adds no eigenstate"
            )
        rest = [f for i, f in enumerate(self.seed_functions) if i != j]
        return self._wronskian(rest) / self.wronskian

    def eigen_residual(self, n: int) -> RatFunc:
        """
        Schrodinger residual of the deformed eigenfunction n
        """
        return self.base.schrodinger_residual(
            self.eigenfunction(n), self.energy(n), self.potential_delta
        )

    def extra_residual(self, j: int) -> RatFunc:
        return self.base.schrodinger_residual(
            self.extra_eigenfunction(j),
            self.seeds[j].energy,
            self.potential_delta,
        )

    def ground_label(self) -> int:
        """
        mu, the smallest level not deleted
        """
        mu = 0
        while mu in self.deleted:
            mu += 1
        return mu

    def levels(self, n_max: int) -> List[int]:
        """
        The retained base levels up to n_max
        """
        count = self.base.bound_state_count()
        top = n_max if count is None else min(n_max, count - 1)
        return [n for n in range(top + 1) if n not in self.deleted]


def potential_delta(w: PrefactoredFunction, dx: Callable) -> RatFunc:
    """
    -2 (log|W|)'' = -2 (W'' W - W'^2) / W^2
    """
    w1 = dx(w)
    w2 = dx(w1)
    return (w2 * w - w1**2).ratio(w**2) * -2


def deform_system(
    model: ModelSystem,
    specs: Sequence[SeedSpec],
    unsafe: bool = False,
    deleted: Sequence[int] = (),
    shifted_params: Optional[ModelParams] = None,
) -> DeformedSystem:
    """
    Builds the deformed system for an ordered list of seeds.
    """
    specs = list(specs)
    if not specs:
        raise UsageError("A deformation needs at least one seed")
    if len(set(specs)) != len(specs):
        raise UsageError("Seeds must be pairwise distinct")

    seeds = tuple(make_seed(model, s) for s in specs)
    w = prefactored_wronskian([s.fn for s in seeds], "x", model.coord.eta_prime)
    if w.is_zero:
        raise DegeneracyError(
            "The seed Wronskian vanishes identically: "
            + ", ".join(str(s) for s in specs)
        )

    return DeformedSystem(
        base=model,
        seeds=seeds,
        wronskian=w,
        potential_delta=potential_delta(w, model.dx),
        shifted_params=shifted_params,
        deleted=tuple(sorted(deleted)),
        unsafe=unsafe,
    )


def certify_nonsingular(system: DeformedSystem) -> NonsingularVerdict:
    """
    Counts the real zeros of the stripped Wronskian inside the physical
    eta interval.
    """
    denominator = system.denominator()
    count = real_root_count(denominator, system.coord.eta_interval)
    return NonsingularVerdict(count == 0, count, denominator)


def adler_condition(deleted: Sequence[int]) -> Optional[int]:
    """
    Returns the first m >= 0 with prod_j (m - d_j) < 0, or None.  Only
    m below max(D) can fail: the product's sign is the parity of the
    number of deleted levels above m.
    """
    levels = set(deleted)
    for m in range(max(levels, default=0)):
        if m in levels:
            continue
        above = sum(1 for d in levels if d > m)
        if above % 2:
            return m
    return None


@dataclass
class CrumReport:
    """
    The deformed system of a Crum tower with its equivalence checks.
    """

    system: DeformedSystem
    potential_residual: RatFunc
    constants: Dict[int, Rational] = field(default_factory=dict)


def _a_operator(model: ModelSystem, f: PrefactoredFunction):
    # A f = phi_0 (f / phi_0)'
    phi0 = model.ground_state()
    return phi0 * model.dx(f / phi0)


def crum_tower(model: ModelSystem, s: int, n_max: int = 3) -> CrumReport:
    """
    Deletes the lowest s levels.  The result must equal the base model at
    lambda + s delta shifted by E(s), and its eigenfunctions must match
    A(lambda + (s-1) delta) ... A(lambda) phi_n up to constants.
    """
    if s < 1:
        raise UsageError(f"Crum tower height must be positive, got {s}")
    model.check_level(s - 1)

    system = deform_system(
        model,
        [SeedSpec(SeedKind.EIGEN, n) for n in range(s)],
        deleted=range(s),
        shifted_params=model.shift_params(s),
    )

    shifted = model.shifted(s)
    expected = (
        shifted.potential()
        + model.energy_formal(s)
        - shifted.energy_formal(0)
    )
    residual = system.potential() - expected
    if not residual.is_zero:
        raise InvariantViolation("crum-potential", residual=residual)

    constants = {}
    for n in system.levels(n_max):
        iterated = model.eigenfunction(n)
        for step in range(s):
            iterated = _a_operator(model.shifted(step), iterated)

        c = system.eigenfunction(n).proportionality(iterated)
        if c is None or c == 0:
            raise InvariantViolation(
                "crum-eigenfunction", detail=f"level {n} not proportional"
            )
        constants[n] = c

    return CrumReport(system, residual, constants)


def krein_adler(
    model: ModelSystem,
    deleted: Sequence[int],
    unsafe: bool = False,
    warn: Callable[[str], None] = None,
) -> DeformedSystem:
    """
    Deletes an arbitrary set of eigenlevels.  A set violating
    prod_j (m - d_j) >= 0 is refused unless unsafe is set.
    """
    levels = sorted(set(deleted))
    if not levels:
        raise UsageError("Krein-Adler deletion needs a nonempty level set")
    if len(levels) != len(deleted):
        raise UsageError(f"Repeated level in {list(deleted)}")
    for d in levels:
        model.check_level(d)

    bad = adler_condition(levels)
    if bad is not None:
        msg = (
            f"Deletion of {levels} violates prod (m - d_j) >= 0 at m={bad}"
        )
        if not unsafe:
            raise DomainError(msg)
        if warn is not None:
            warn(msg + "; building it anyway")

    return deform_system(
        model,
        [SeedSpec(SeedKind.EIGEN, d) for d in levels],
        unsafe=bad is not None,
        deleted=levels,
    )


def norm_ratio(system: DeformedSystem, n: int) -> Rational:
    """
    prod_j (E(n) - E(d_j)), the ratio of deformed to base norms
    """
    energy = system.energy(n)
    result = Rational(1)
    for d in system.deleted:
        result *= energy - system.base.energy(d)
    return result


def deformed_weight(system: DeformedSystem) -> PrefactoredFunction:
    """
    phi_0^2 eta'^(2M) / Xi^2 with Xi the primitive, positive-leading
    denominator of an eigenstate deletion; the deformed eigenfunctions
    are phi_0 eta'^M P~_n / Xi for polynomials P~_n.
    """
    if not system.deleted or any(
        s.spec.kind != SeedKind.EIGEN for s in system.seeds
    ):
        raise UsageError("The deformed weight needs an eigenstate deletion")

    xi = primitive_part(system.denominator())

    phi0 = system.base.ground_state()
    m = len(system.seeds)
    return phi0**2 * system.coord.eta_prime ** (2 * m) / RatFunc(xi) ** 2


def _order_invariants(system: DeformedSystem, n_max: int):
    eigen = []
    for n in system.levels(n_max):
        f = system.eigenfunction(n).ratfunc
        eigen.append((primitive_part(f.num), f.den))
    return (
        system.potential_delta,
        primitive_part(system.denominator()),
        eigen,
    )


def order_independent(
    model: ModelSystem, specs: Sequence[SeedSpec], n_max: int = 2
) -> bool:
    """
    Every ordering of the seeds gives the same potential deformation,
    denominator and eigenfunction polynomials up to an overall constant.
    """
    orders = permutations(specs)
    first = _order_invariants(
        deform_system(model, next(orders), unsafe=True), n_max
    )
    return all(
        _order_invariants(deform_system(model, order, unsafe=True), n_max)
        == first
        for order in orders
    )
