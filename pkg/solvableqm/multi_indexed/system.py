"""
Multi-indexed Laguerre and Jacobi polynomials, obtained by deleting type I
and type II virtual states, together with the deformed Hamiltonian and
shift operators that govern them.

Xi_D and P_D,n are eta Wronskians of the virtual state entries times a
global prefactor.  The row order is type I ascending, then type II
ascending; any other order is brought back to it with the sign of the
sorting permutation.
"""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from sympy import QQ, Poly, Rational, Symbol, roots

from solvableqm.darboux import NonsingularVerdict
from solvableqm.errors import (
    DomainError,
    InvariantViolation,
    UnsupportedModelError,
    UsageError,
)
from solvableqm.exact import (
    ETA,
    DiffOp,
    PrefactoredFunction,
    RatFunc,
    prefactored_wronskian,
    real_root_count,
    reflect,
)
from solvableqm.helpers import parse_index_set
from solvableqm.models import HALF, ModelId, ModelParams, ModelSystem
from solvableqm.ortho_poly import jacobi, laguerre

TYPE_ONE = "I"
TYPE_TWO = "II"

Entry = Tuple[str, int]

# tilde delta of each deletion type, as (g, h) offsets
TILDE_DELTA = {TYPE_ONE: (-1, 1), TYPE_TWO: (1, -1)}


@dataclass(frozen=True)
class IndexSet:
    """
    The deleted virtual state degrees D = {d^I_1..d^I_M, d^II_1..d^II_N}.
    Degrees are stored sorted; zero is only accepted with allow_zero.
    """

    type_one: Tuple[int, ...] = ()
    type_two: Tuple[int, ...] = ()
    allow_zero: bool = field(default=False, compare=False)

    def __post_init__(self):
        floor = 0 if self.allow_zero else 1
        for name in ("type_one", "type_two"):
            values = tuple(int(d) for d in getattr(self, name))
            if len(set(values)) != len(values):
                raise UsageError(f"Repeated type {name[5:]} index in {values}")
            if any(d < floor for d in values):
                raise UsageError(
                    f"Multi-index degrees must be >= {floor}, got {values}"
                )
            object.__setattr__(self, name, tuple(sorted(values)))

    @classmethod
    def parse(cls, text: str) -> "IndexSet":
        """
        Parses "1I,2I,1II"; an empty string is the empty set.
        """
        type_one, type_two = parse_index_set(text)
        return cls(type_one, type_two)

    @property
    def M(self) -> int:
        return len(self.type_one)

    @property
    def N(self) -> int:
        return len(self.type_two)

    @property
    def is_empty(self) -> bool:
        return not (self.type_one or self.type_two)

    @property
    def ell(self) -> int:
        """
        The degree of Xi_D
        """
        m, n = self.M, self.N
        return (
            sum(self.type_one)
            + sum(self.type_two)
            - m * (m - 1) // 2
            - n * (n - 1) // 2
            + m * n
        )

    def entries(self) -> List[Entry]:
        """
        The Wronskian rows in canonical order
        """
        return [(TYPE_ONE, d) for d in self.type_one] + [
            (TYPE_TWO, d) for d in self.type_two
        ]

    def __str__(self):
        text = ",".join(f"{d}{kind}" for kind, d in self.entries())
        return text or "{}"


@dataclass(frozen=True)
class MultiIndexedPoly:
    """
    P_D,n with its labels
    """

    index_set: IndexSet
    n: int
    poly: Poly


def _require_model(model: ModelSystem):
    if model.model_id not in (ModelId.L, ModelId.J):
        raise UnsupportedModelError(
            f"Multi-indexed polynomials exist for L and J, "
            f"not {model.model_id.value}"
        )


def offset_params(model: ModelSystem, dg, dh=0) -> ModelParams:
    """
    (g + dg) for L, (g + dg, h + dh) for J
    """
    if model.model_id == ModelId.L:
        return ModelParams(g=model.g + dg)
    return ModelParams(model.g + dg, model.h + dh)


def deleted_params(model: ModelSystem, index_set: IndexSet) -> ModelParams:
    """
    lambda^[M,N] = lambda - M tilde delta^I - N tilde delta^II
    """
    m, n = index_set.M, index_set.N
    (g1, h1), (g2, h2) = TILDE_DELTA[TYPE_ONE], TILDE_DELTA[TYPE_TWO]
    return offset_params(model, -m * g1 - n * g2, -m * h1 - n * h2)


def virtual_poly(model: ModelSystem, kind: str, d: int) -> Poly:
    """
    xi^I_d or xi^II_d at the model's parameters
    """
    g, h = model.g, model.h
    if model.model_id == ModelId.L:
        if kind == TYPE_ONE:
            return reflect(laguerre(d, g - HALF))
        return laguerre(d, HALF - g)
    if kind == TYPE_ONE:
        return jacobi(d, g - HALF, HALF - h)
    return jacobi(d, HALF - g, h - HALF)


def _entry(model: ModelSystem, kind: str, d: int) -> PrefactoredFunction:
    xi = RatFunc(virtual_poly(model, kind, d))
    basis = model.basis
    if model.model_id == ModelId.L:
        if kind == TYPE_ONE:
            return PrefactoredFunction(xi, Poly(ETA, ETA, domain=QQ), basis)
        return PrefactoredFunction(xi, 0, basis, [HALF - model.g])
    if kind == TYPE_ONE:
        return PrefactoredFunction(xi, 0, basis, [0, HALF - model.h])
    return PrefactoredFunction(xi, 0, basis, [HALF - model.g, 0])


def _global_prefactor(
    model: ModelSystem, m: int, n: int, shift
) -> PrefactoredFunction:
    g = model.g
    if model.model_id == ModelId.L:
        return PrefactoredFunction(
            1,
            Poly(-m * ETA, ETA, domain=QQ),
            model.basis,
            [(m + g + shift) * n],
        )
    return PrefactoredFunction(
        1,
        0,
        model.basis,
        [(m + g + shift) * n, (n + model.h + shift) * m],
    )


def permutation_sign(order: Sequence[Entry], canonical: Sequence[Entry]):
    """
    The sign of the permutation taking `order` to `canonical`.
    """
    if sorted(order) != sorted(canonical) or len(set(order)) != len(order):
        raise UsageError(f"{list(order)} is not an ordering of {canonical}")
    position = {entry: i for i, entry in enumerate(canonical)}
    ranks = [position[entry] for entry in order]
    inversions = sum(
        1
        for i in range(len(ranks))
        for j in range(i + 1, len(ranks))
        if ranks[i] > ranks[j]
    )
    return -1 if inversions % 2 else 1


def _wronskian_poly(
    model: ModelSystem,
    index_set: IndexSet,
    extra: Optional[Poly],
    order: Optional[Sequence[Entry]],
) -> Poly:
    canonical = index_set.entries()
    order = canonical if order is None else [tuple(e) for e in order]
    sign = permutation_sign(order, canonical)

    fns = [_entry(model, kind, d) for kind, d in order]
    if extra is not None:
        fns.append(PrefactoredFunction(RatFunc(extra), 0, model.basis))
    if not fns:
        return Poly(1, ETA, domain=QQ)

    shift = HALF if extra is not None else -HALF
    prefactor = _global_prefactor(model, index_set.M, index_set.N, shift)
    w = prefactored_wronskian(fns, "eta") * prefactor

    try:
        result = w.to_ratfunc()
    except UsageError as exc:
        raise InvariantViolation(
            "multi-indexed-prefactor", detail=str(exc)
        ) from exc
    if not result.is_polynomial:
        raise InvariantViolation(
            "multi-indexed-prefactor",
            residual=result,
            detail=f"D={index_set} leaves a pole after stripping",
        )
    return result.num * sign


def bound_violations(model: ModelSystem, index_set: IndexSet) -> List[str]:
    """
    The parameter bounds a deletion needs that the model's parameters miss.
    """
    if index_set.is_empty:
        return []
    m, n = index_set.M, index_set.N
    problems = []

    if model.model_id == ModelId.L:
        g_bound = max(
            [n + Rational(3, 2)] + [d + HALF for d in index_set.type_two]
        )
        if model.g <= g_bound:
            problems.append(f"g > {g_bound}")
        return problems

    g_bound = max([Rational(n + 2)] + [d + HALF for d in index_set.type_two])
    h_bound = max([Rational(m + 2)] + [d + HALF for d in index_set.type_one])
    if model.g <= g_bound:
        problems.append(f"g > {g_bound}")
    if model.h <= h_bound:
        problems.append(f"h > {h_bound}")
    return problems


def virtual_energy(model: ModelSystem, entry: Entry) -> Rational:
    """
    The energy of a virtual state entry at the model's parameters
    """
    kind, d = entry
    g = model.g
    if model.model_id == ModelId.L:
        if kind == TYPE_ONE:
            return -4 * (g + d + HALF)
        return -4 * (g - d - HALF)
    h = model.h
    if kind == TYPE_ONE:
        return -4 * (g + d + HALF) * (h - d - HALF)
    return -4 * (g - d - HALF) * (h + d + HALF)


def coincident_entries(
    model: ModelSystem, index_set: IndexSet
) -> List[Tuple[Entry, Entry]]:
    """
    Pairs of entries sharing a virtual energy; their Wronskian is constant.
    """
    seen = {}
    pairs = []
    for entry in index_set.entries():
        energy = virtual_energy(model, entry)
        if energy in seen:
            pairs.append((seen[energy], entry))
        else:
            seen[energy] = entry
    return pairs


def check_bounds(
    model: ModelSystem,
    index_set: IndexSet,
    unsafe: bool = False,
    warn: Callable[[str], None] = None,
) -> bool:
    """
    Raises DomainError for a bound violation unless unsafe is set, in which
    case the violation is passed to warn.  Returns whether all bounds hold.
    Entries of equal energy are refused even when unsafe is set.
    """
    pairs = coincident_entries(model, index_set)
    if pairs:
        first, second = pairs[0]
        raise DomainError(
            f"D={index_set} at {model}: {first[1]}{first[0]} and "
            f"{second[1]}{second[0]} share the virtual energy "
            f"{virtual_energy(model, first)}"
        )
    problems = bound_violations(model, index_set)
    if not problems:
        return True
    msg = f"D={index_set} at {model} needs " + " and ".join(problems)
    if not unsafe:
        raise DomainError(msg)
    if warn is not None:
        warn(msg + "; building it anyway")
    return False


def denominator_xi(
    model: ModelSystem,
    index_set: IndexSet,
    order: Optional[Sequence[Entry]] = None,
    unsafe: bool = False,
    warn: Callable[[str], None] = None,
) -> Poly:
    """
    Xi_D(eta; lambda), of degree ell.  `order` lists the entries in any
    order; the result does not depend on it.
    """
    _require_model(model)
    check_bounds(model, index_set, unsafe, warn)
    return _wronskian_poly(model, index_set, None, order)


def multi_poly(
    model: ModelSystem,
    index_set: IndexSet,
    n: int,
    order: Optional[Sequence[Entry]] = None,
    unsafe: bool = False,
    warn: Callable[[str], None] = None,
) -> MultiIndexedPoly:
    """
    P_D,n(eta; lambda), of degree ell + n.  For the empty set it is the
    classical P_n.
    """
    _require_model(model)
    check_bounds(model, index_set, unsafe, warn)
    p = _wronskian_poly(model, index_set, model.eigen_poly_formal(n), order)
    return MultiIndexedPoly(index_set, n, p)


@dataclass
class MultiIndexedSystem:
    """
    A base system deformed by a type I/II virtual state deletion.
    """

    base: ModelSystem
    index_set: IndexSet
    xi: Poly
    shifted_params: ModelParams
    unsafe: bool = False

    def __repr__(self):
        return f"MultiIndexedSystem({self.base!r}; D={self.index_set})"

    @property
    def ell(self) -> int:
        return self.index_set.ell

    @property
    def coord(self):
        return self.base.coord

    def at(self, s=1) -> "MultiIndexedSystem":
        """
        The same deletion at lambda + s delta, without bound checks.
        """
        return _build(self.base.shifted(s), self.index_set, unsafe=True)

    def poly(self, n: int) -> Poly:
        if n < 0:
            raise DomainError(f"Level must be non-negative, got {n}")
        return _wronskian_poly(
            self.base, self.index_set, self.base.eigen_poly_formal(n), None
        )

    def energy(self, n: int) -> Rational:
        return self.base.energy(n)

    def deleted_model(self) -> ModelSystem:
        """
        The base model at lambda^[M,N]
        """
        return self.base.with_params(self.shifted_params)

    def weight(self) -> PrefactoredFunction:
        """
        W(eta; lambda^[M,N]) / Xi_D^2, the orthogonality weight in eta.
        """
        shifted = self.deleted_model()
        g = shifted.g
        if self.base.model_id == ModelId.L:
            # e^-eta eta^(g-1/2) / 2
            w = PrefactoredFunction(
                HALF, Poly(-ETA, ETA, domain=QQ), self.base.basis, [g - HALF]
            )
        else:
            # 2^(-g-h-1) (1-eta)^(g-1/2) (1+eta)^(h-1/2)
            w = PrefactoredFunction(
                Rational(1, 4), 0, self.base.basis, [g - HALF, shifted.h - HALF]
            )
        return w / RatFunc(self.xi) ** 2

    def eigenfunction(self, n: int) -> PrefactoredFunction:
        """
        phi_0(x; lambda^[M,N]) P_D,n / Xi_D
        """
        phi0 = self.deleted_model().ground_state()
        return phi0 * RatFunc(self.poly(n), self.xi)

    def potential(self) -> RatFunc:
        """
        U_D = phi_D,0''/phi_D,0 + E(0)
        """
        phi0 = self.eigenfunction(0)
        dx = self.base.dx
        return dx(dx(phi0)).ratio(phi0) + self.base.energy_formal(0)

    def certify(self) -> NonsingularVerdict:
        """
        Sturm count of the zeros of Xi_D inside the physical interval.
        """
        count = real_root_count(self.xi, self.coord.eta_interval)
        return NonsingularVerdict(count == 0, count, self.xi)


def _build(
    model: ModelSystem, index_set: IndexSet, unsafe: bool = False
) -> MultiIndexedSystem:
    xi = _wronskian_poly(model, index_set, None, None)
    return MultiIndexedSystem(
        model, index_set, xi, deleted_params(model, index_set), unsafe
    )


def make_multi_indexed(
    model: ModelSystem,
    index_set: IndexSet,
    unsafe: bool = False,
    warn: Callable[[str], None] = None,
) -> MultiIndexedSystem:
    """
    Builds the deformed system, checking the parameter bounds, the degree
    of Xi_D and that its zeros are simple.
    """
    _require_model(model)
    within = check_bounds(model, index_set, unsafe, warn)
    system = _build(model, index_set, unsafe=not within)

    if system.xi.degree() != index_set.ell:
        raise InvariantViolation(
            "xi-degree",
            residual=system.xi.degree() - index_set.ell,
            detail=f"deg Xi = {system.xi.degree()}, ell = {index_set.ell}",
        )

    if system.xi.degree() > 0 and system.xi.gcd(system.xi.diff()).degree():
        msg = f"Xi_D for D={index_set} at {model} has a repeated zero"
        if not unsafe:
            raise DomainError(msg)
        if warn is not None:
            warn(msg + "; its certification is skipped")
        system.unsafe = True

    return system


def deformed_tilde_h(system: MultiIndexedSystem) -> DiffOp:
    """
    -4 (c2 D^2 + (c1(lambda^[M,N]) - 2 c2 Xi'/Xi) D
        + c2 Xi''/Xi - c1(lambda^[M,N] - delta) Xi'/Xi)
    """
    shifted = system.deleted_model()
    c1, c2 = shifted.c1_c2()
    c1_low, _ = shifted.shifted(-1).c1_c2()

    xi = RatFunc(system.xi)
    first = xi.diff() / xi
    second = xi.diff().diff() / xi
    c1, c2, c1_low = RatFunc(c1), RatFunc(c2), RatFunc(c1_low)

    return DiffOp(
        [
            (c2 * second - c1_low * first) * -4,
            (c1 - c2 * first * 2) * -4,
            c2 * -4,
        ]
    )


def fuchs_residual(system: MultiIndexedSystem, n: int) -> Poly:
    """
    H~_D P_D,n - E(n) P_D,n; zero for every n.
    """
    p = system.poly(n)
    residual = deformed_tilde_h(system).apply(p) - RatFunc(p) * (
        system.base.energy_formal(n)
    )
    return residual.num


def deformed_shift_operators(
    system: MultiIndexedSystem,
) -> Tuple[DiffOp, DiffOp]:
    """
    The forward and backward shift operators F_D(lambda) and B_D(lambda).
    """
    data = system.base.shift_data()
    c1, c2 = system.deleted_model().c1_c2()

    xi = RatFunc(system.xi)
    upper = RatFunc(system.at(1).xi)

    forward = DiffOp(
        [upper.diff() / xi * -data.cF, upper / xi * data.cF]
    )

    scale = xi / upper * (Rational(-4) / data.cF)
    c1, c2 = RatFunc(c1), RatFunc(c2)
    backward = DiffOp(
        [scale * (c1 - c2 * xi.diff() / xi), scale * c2]
    )
    return forward, backward


def shift_relations_check(
    system: MultiIndexedSystem, n: int
) -> Tuple[Poly, Poly]:
    """
    Residuals of F_D P_D,n = f_n P_D,n-1(lambda + delta) and
    B_D P_D,n-1(lambda + delta) = b_(n-1) P_D,n.
    """
    if n < 1:
        raise UsageError(f"Shift relations need n >= 1, got {n}")

    data = system.base.shift_data()
    forward, backward = deformed_shift_operators(system)
    p_n = system.poly(n)
    p_prev = system.at(1).poly(n - 1)

    forward_res = forward.apply(p_n) - RatFunc(p_prev) * data.f(n)
    backward_res = backward.apply(p_prev) - RatFunc(p_n) * data.b(n)
    return forward_res.num, backward_res.num


def plusdelta_constant(model: ModelSystem, index_set: IndexSet) -> Rational:
    """
    The constant in P_D,0(lambda) = c Xi_D(lambda + delta).
    """
    g, h = model.g, model.h
    if model.model_id == ModelId.L:
        c = Rational((-1) ** index_set.M)
        for d in index_set.type_two:
            c *= g - d - HALF
        return c

    c = Rational(1, 2**index_set.M)
    for d in index_set.type_one:
        c *= h - d - HALF
    c *= Rational(-2) ** -index_set.N
    for d in index_set.type_two:
        c *= g - d - HALF
    return c


def plusdelta_check(system: MultiIndexedSystem) -> Rational:
    """
    Solves P_D,0(lambda) = c Xi_D(lambda + delta) for c and compares it
    with the product formula.
    """
    p0 = system.poly(0)
    upper = system.at(1).xi
    ratio = RatFunc(p0, upper)
    if not ratio.is_constant:
        raise InvariantViolation(
            "plusdelta", residual=ratio, detail="P_D,0 not a multiple"
        )
    c = ratio.constant_value()
    expected = plusdelta_constant(system.base, system.index_set)
    if c != expected:
        raise InvariantViolation("plusdelta", residual=c - expected)
    return c


def orthogonality_factors(
    model: ModelSystem, index_set: IndexSet, n: int
) -> Rational:
    """
    The factor multiplying h_n(lambda) in the norm of P_D,n against the
    deformed weight.
    """
    _require_model(model)
    g, h = model.g, model.h
    result = Rational(1)

    if model.model_id == ModelId.L:
        for d in index_set.type_one:
            result *= n + g + d + HALF
        for d in index_set.type_two:
            result *= n + g - d - HALF
        return result

    result = Rational(1, 4 ** (index_set.M + index_set.N))
    for d in index_set.type_one:
        result *= (n + g + d + HALF) * (n + h - d - HALF)
    for d in index_set.type_two:
        result *= (n + g - d - HALF) * (n + h + d + HALF)
    return result


def frobenius_exponents(
    system: MultiIndexedSystem, root
) -> Tuple[Rational, ...]:
    """
    The indicial exponents of H~_D at a rational zero of Xi_D.
    """
    root = Rational(root)
    if system.xi.eval(root) != 0:
        raise UsageError(f"{root} is not a zero of Xi_D = {system.xi}")

    op = deformed_tilde_h(system)
    local = RatFunc(Poly(ETA - root, ETA, domain=QQ))
    lead = op.coeff(2)
    q1 = (op.coeff(1) * local / lead).eval(root)
    q0 = (op.coeff(0) * local**2 / lead).eval(root)

    rho = Symbol("rho")
    found = roots(Poly(rho**2 + (q1 - 1) * rho + q0, rho))
    exponents = []
    for value, multiplicity in found.items():
        exponents.extend([value] * multiplicity)
    return tuple(sorted(exponents))
