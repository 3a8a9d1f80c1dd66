"""
The verification suites behind `solvable-qm verify`.

Every suite takes a SuiteRequest and returns a list of Verdicts.  Exact
identities pass only when their residual is the zero object; numeric ones
compare against the catalogue tolerances, scaled by --tolerance-scale.
Library guards raised inside a check become failed verdicts; usage and
domain errors propagate.
"""

import multiprocessing as mproc
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, Poly, Rational

from solvableqm.darboux import (
    SeedSpec,
    adler_condition,
    certify_nonsingular,
    crum_tower,
    deformed_weight,
    krein_adler,
)
from solvableqm.errors import SolvableQMError, UsageError
from solvableqm.exact import ETA, primitive_part
from solvableqm.helpers import parse_index_set, parse_rational
from solvableqm.models import (
    LadderDirection,
    ModelId,
    ModelParams,
    ModelSystem,
    closure_residual,
    discrete_symmetry_residuals,
    eigen_residual,
    heisenberg_step_check,
    ladder_action,
    ladder_products,
    make_model,
    rodrigues_check,
    shape_invariance_residual,
    shift_energy_residual,
    shift_relation_check,
    soliton_limits_check,
)
from solvableqm.multi_indexed import (
    IndexSet,
    duality_check,
    frobenius_exponents,
    fuchs_residual,
    make_multi_indexed,
    plusdelta_check,
    shift_relations_check,
    structural_identities,
)
from solvableqm.numeric import (
    GridSpec,
    count_sign_changes,
    krein_adler_norm_check,
    multi_orthogonality_check,
    orthogonality_check,
    recurrence_residual,
    reflection_residual,
    sample_wavefunction,
    system_residual,
)
from solvableqm.numeric.tolerances import TOLERANCES, load_catalogue
from solvableqm.ortho_poly import (
    diffeq_residual,
    recurrence_coeffs,
    rodrigues_poly,
)
from solvableqm.output import format_float
from solvableqm.scattering import (
    DeformationFactor,
    ReflectionlessSpec,
    Side,
    amplitude_symmetry_check,
    deform_amplitudes,
    deformation_identity_check,
    evaluate_amplitude,
    kdv_evolve,
    pole_scan,
    positivity_check,
    reflectionless_amplitudes,
    shape_constraint_check,
    single_soliton_check,
    soliton_amplitudes,
    special_soliton_check,
    unit_modulus_residual,
    unitarity_residual,
    wronskian_equivalence,
)

CATALOGUE = load_catalogue()

SuiteFunction = Callable[["SuiteRequest"], List["Verdict"]]
SUITES: Dict[str, SuiteFunction] = {}

# real momenta the amplitude suites sample
K_SAMPLES = np.linspace(0.1, 5.0, 20)

# x grid for Kay-Moses sign checks and potential comparisons
X_SAMPLES = np.linspace(-10.0, 10.0, 401)

# complex arguments of the log gamma identities
GAMMA_SAMPLES = (
    0.3 + 0.7j,
    -2.5 + 0.5j,
    1.7 - 1.2j,
    -0.75 + 0.25j,
    4.2 + 2.0j,
)

# (a, b, step) of the finite-difference windows, clear of the endpoints
FD_WINDOWS = {
    ModelId.H: (-6.0, 6.0, 1 / 100),
    ModelId.L: (1.0, 6.0, 1 / 200),
    ModelId.J: (0.3, 1.3, 1 / 400),
    ModelId.SOLITON: (-6.0, 6.0, 1 / 200),
}

# levels deleted for the deformed finite-difference check
FD_DELETED = (1, 2)

NODE_POINTS = 2048

# the eigen operator's leading coefficient ratio must match these
CLOSED_FORMS: Dict[ModelId, Callable[[ModelSystem, int], Rational]] = {
    ModelId.H: lambda m, n: Rational(2 * n),
    ModelId.L: lambda m, n: Rational(4 * n),
    ModelId.J: lambda m, n: 4 * n * (n + m.g + m.h),
    ModelId.SOLITON: lambda m, n: -((m.h - n) ** 2),
}


def verification_suite(name: str):
    """
    Registers the decorated function as the suite `name`.
    """

    def inner(func: SuiteFunction) -> SuiteFunction:
        SUITES[name] = func
        return func

    return inner


@dataclass
class Verdict:
    """
    The outcome of one check
    """

    name: str
    passed: bool
    residual: Any = None
    detail: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "pass": self.passed,
            "residual": self.residual,
            "detail": self.detail,
        }

    def qualified(self, prefix: str) -> "Verdict":
        return replace(self, name=f"{prefix} {self.name}")


@dataclass
class SuiteRequest:
    """
    One suite run: the model and parameters given on the command line,
    the raw suite options, and the tolerance scale.  Anything not given
    falls back to the catalogue.
    """

    suite: str
    model: Optional[str] = None
    params: ModelParams = field(default_factory=ModelParams)
    options: Dict[str, Any] = field(default_factory=dict)
    unsafe: bool = False
    tolerance_scale: float = 1.0
    warn: Optional[Callable[[str], None]] = None

    @property
    def entry(self) -> Dict[str, Any]:
        return CATALOGUE["suites"][self.suite]

    def option(self, key: str) -> Any:
        value = self.options.get(key)
        if value is None:
            value = (self.entry.get("defaults") or {}).get(key)
        if value is None:
            raise UsageError(f"Suite {self.suite} needs --{key}")
        return value

    def int_option(self, key: str) -> int:
        try:
            return int(self.option(key))
        except ValueError as exc:
            raise UsageError(f"--{key} must be an integer") from exc

    def rational_option(self, key: str) -> Rational:
        return parse_rational(self.option(key))

    def rationals_option(self, key: str) -> List[Rational]:
        return [
            parse_rational(v)
            for v in str(self.option(key)).split(",")
            if v.strip()
        ]

    def tolerance(self, key: str) -> float:
        return TOLERANCES[key] * self.tolerance_scale

    def model_params(self) -> ModelParams:
        """
        Catalogue defaults, then the suite's own parameter point, then the
        command line.
        """
        model_id = ModelId.parse(self.model)
        merged = dict(CATALOGUE["models"].get(model_id.value) or {})
        suite_params = self.entry.get("params") or {}
        merged.update(suite_params.get(model_id.value) or {})
        merged.update(self.params.as_dict())
        return ModelParams(
            **{k: parse_rational(v) for k, v in merged.items()}
        )

    def system(self) -> ModelSystem:
        if self.model is None:
            raise UsageError(f"Suite {self.suite} needs --model")
        return make_model(self.model, self.model_params())


def suite_models(name: str) -> List[str]:
    return list(CATALOGUE["suites"][name].get("models") or [])


def suite_summary(name: str) -> str:
    return CATALOGUE["suites"][name].get("summary", "")


def _is_zero(value) -> bool:
    if value is None:
        return True
    if isinstance(value, (int, Rational)):
        return value == 0
    if isinstance(value, dict):
        return all(_is_zero(v) for v in value.values())
    if isinstance(value, (list, tuple)):
        return all(_is_zero(v) for v in value)
    return bool(value.is_zero)


def _failure(name: str, exc: SolvableQMError) -> Verdict:
    if exc.exit_code != 1:
        raise exc
    residual = None
    for attr in ("residual", "distance", "estimate"):
        residual = getattr(exc, attr, None)
        if residual is not None:
            break
    return Verdict(name, False, residual, str(exc))


def exact_verdict(name: str, thunk: Callable[[], Any]) -> Verdict:
    """
    Passes when thunk returns an exactly zero residual.
    """
    try:
        residual = thunk()
    except SolvableQMError as exc:
        return _failure(name, exc)
    if _is_zero(residual):
        return Verdict(name, True, Rational(0))
    return Verdict(name, False, residual, "nonzero residual")


def numeric_verdict(
    name: str, thunk: Callable[[], float], tolerance: float
) -> Verdict:
    """
    Passes when thunk returns a deviation within tolerance.
    """
    try:
        value = float(thunk())
    except SolvableQMError as exc:
        return _failure(name, exc)
    # NaN compares false and fails
    return Verdict(
        name, value <= tolerance, value, f"tolerance {format_float(tolerance)}"
    )


def checked_result(
    name: str,
    thunk: Callable[[], Any],
    describe: Callable[[Any], str] = lambda result: "",
) -> Tuple[Any, Verdict]:
    """
    Runs a check that raises on failure.  Returns what thunk returned, or
    None when it failed, with the verdict.
    """
    try:
        result = thunk()
    except SolvableQMError as exc:
        return None, _failure(name, exc)
    return result, Verdict(name, True, Rational(0), describe(result))


def holds_verdict(
    name: str,
    thunk: Callable[[], Any],
    describe: Callable[[Any], str] = lambda result: "",
) -> Verdict:
    """
    Passes when thunk returns; the checks it runs raise on failure.
    """
    return checked_result(name, thunk, describe)[1]


def nonzero_verdict(
    name: str, thunk: Callable[[], Any], label: str
) -> Verdict:
    """
    Passes when thunk returns a nonzero coefficient.
    """
    try:
        value = thunk()
    except SolvableQMError as exc:
        return _failure(name, exc)
    return Verdict(name, value != 0, value, f"{label} = {value}")


def _levels(model: ModelSystem, n_max: int) -> range:
    count = model.bound_state_count()
    top = n_max if count is None else min(n_max, count - 1)
    return range(top + 1)


def _operator_eigenvalue(model: ModelSystem, n: int) -> Rational:
    """
    E(n) read off H~ P_n as a ratio of leading coefficients
    """
    p = model.eigen_poly(n)
    image = model.tilde_h(n).apply_poly(p)
    if image.is_zero:
        return Rational(0)
    return Rational(image.LC()) / Rational(p.LC())


def _index_set(text: str, allow_zero=False) -> IndexSet:
    type_one, type_two = parse_index_set(str(text))
    return IndexSet(type_one, type_two, allow_zero=allow_zero)


def _integers(text) -> List[int]:
    try:
        return [int(v) for v in str(text).split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"Not a list of integers: {text!r}") from exc


def _soliton_strengths(request: SuiteRequest) -> List[Rational]:
    if request.params.h is not None:
        return [request.params.h]
    return request.rationals_option("h-values")


def _reflectionless(request: SuiteRequest) -> ReflectionlessSpec:
    return ReflectionlessSpec(
        tuple(request.rationals_option("k")),
        tuple(request.rationals_option("c")),
    )


@verification_suite("spectrum")
def spectrum_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    closed = CLOSED_FORMS[model.model_id]
    verdicts = []
    for n in _levels(model, request.int_option("n-max")):
        verdicts.append(
            exact_verdict(
                f"E({n}) operator",
                lambda n=n: _operator_eigenvalue(model, n) - closed(model, n),
            )
        )
        verdicts.append(
            exact_verdict(
                f"E({n}) formula",
                lambda n=n: model.energy(n) - closed(model, n),
            )
        )
    return verdicts


@verification_suite("eigen")
def eigen_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    return [
        exact_verdict(f"eigen({n})", lambda n=n: eigen_residual(model, n))
        for n in _levels(model, request.int_option("n-max"))
    ]


@verification_suite("shape")
def shape_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    return [
        exact_verdict(
            "shape-invariance", lambda: shape_invariance_residual(model)
        )
    ]


@verification_suite("shift")
def shift_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    verdicts = []
    for n in range(1, request.int_option("n-max") + 1):
        verdicts.append(
            exact_verdict(
                f"shift({n})", lambda n=n: shift_relation_check(model, n)
            )
        )
        verdicts.append(
            exact_verdict(
                f"f b = E({n})", lambda n=n: shift_energy_residual(model, n)
            )
        )
    return verdicts


@verification_suite("closure")
def closure_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    return [exact_verdict("closure", lambda: closure_residual(model))]


@verification_suite("heisenberg")
def heisenberg_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    return [
        holds_verdict(
            f"heisenberg({n})",
            lambda n=n: heisenberg_step_check(model, n),
            lambda alphas: "alpha+- = "
            + ", ".join(str(a) for a in alphas),
        )
        for n in range(request.int_option("n-max") + 1)
    ]


@verification_suite("ladder")
def ladder_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    verdicts = []
    for n in range(request.int_option("n-max") + 1):
        verdicts.append(
            nonzero_verdict(
                f"a+ phi_{n}",
                lambda n=n: ladder_action(model, n, LadderDirection.UP),
                "A_n",
            )
        )
        if n:
            verdicts.append(
                nonzero_verdict(
                    f"a- phi_{n}",
                    lambda n=n: ladder_action(model, n, LadderDirection.DOWN),
                    "C_n",
                )
            )
        verdicts.append(
            holds_verdict(
                f"ladder products({n})",
                lambda n=n: ladder_products(model, n),
                lambda fg: f"f = {fg[0]}, g = {fg[1]}",
            )
        )
    return verdicts


@verification_suite("rodrigues")
def rodrigues_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    return [
        holds_verdict(
            f"rodrigues({n})",
            lambda n=n: rodrigues_check(model, n),
            lambda c: f"c = {c}",
        )
        for n in _levels(model, request.int_option("n-max"))
    ]


@verification_suite("symmetry")
def symmetry_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    try:
        residuals = discrete_symmetry_residuals(model)
    except SolvableQMError as exc:
        return [_failure("symmetry", exc)]

    verdicts = [
        exact_verdict(name, lambda r=residual: r)
        for name, residual in residuals.items()
    ]
    if model.model_id == ModelId.SOLITON:
        verdicts.append(
            exact_verdict("W+- = +-h", lambda: soliton_limits_check(model))
        )
    return verdicts


@verification_suite("ortho")
def ortho_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    family = model.family()
    n_max = request.int_option("n-max")
    verdicts = []
    for n in range(n_max + 1):
        verdicts.append(
            exact_verdict(
                f"equation({n})", lambda n=n: diffeq_residual(family, n)
            )
        )
        verdicts.append(
            holds_verdict(
                f"recurrence({n})",
                lambda n=n: recurrence_coeffs(family, n),
                lambda abc: "A, B, C = " + ", ".join(str(v) for v in abc),
            )
        )
        verdicts.append(
            holds_verdict(
                f"rodrigues({n})",
                lambda n=n: rodrigues_poly(family, n),
                lambda pc: f"c = {pc[1]}",
            )
        )

    verdicts.append(
        numeric_verdict(
            "orthogonality",
            lambda: orthogonality_check(model, n_max).worst,
            request.tolerance("orthogonality"),
        )
    )
    return verdicts


@verification_suite("crum")
def crum_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    top = request.int_option("s")
    count = model.bound_state_count()
    if count is not None:
        top = min(top, count - 1)

    return [
        holds_verdict(
            f"crum(s={s})",
            lambda s=s: crum_tower(model, s),
            lambda report: f"{len(report.constants)} eigenfunctions matched",
        )
        for s in range(1, top + 1)
    ]


def _weight_denominator(system) -> Optional[Poly]:
    """
    The residual of the H {1, 2} weight denominator against (1 + 2 x^2)^2
    """
    weight = deformed_weight(system)
    expected = Poly(2 * ETA**2 + 1, ETA, domain=QQ) ** 2
    return primitive_part(weight.ratfunc.den) - expected


@verification_suite("krein-adler")
def krein_adler_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    deleted = _integers(request.option("D"))
    n_max = request.int_option("n-max")

    bad = adler_condition(deleted)
    verdicts = [
        Verdict(
            "adler-condition",
            bad is None,
            detail="" if bad is None else f"violated at m={bad}",
        )
    ]
    if bad is not None and not request.unsafe:
        return verdicts

    system = krein_adler(model, deleted, request.unsafe, request.warn)
    verdict = certify_nonsingular(system)
    verdicts.append(
        Verdict(
            "nonsingular",
            verdict.nonsingular,
            verdict.root_count,
            f"{verdict.root_count} real zeros of the denominator",
        )
    )
    for n in system.levels(n_max):
        verdicts.append(
            exact_verdict(
                f"deformed eigen({n})", lambda n=n: system.eigen_residual(n)
            )
        )

    if model.model_id == ModelId.H and sorted(deleted) == [1, 2]:
        verdicts.append(
            exact_verdict(
                "weight (1 + 2x^2)^-2", lambda: _weight_denominator(system)
            )
        )

    if verdict.nonsingular:
        verdicts.append(
            numeric_verdict(
                "deformed norms",
                lambda: krein_adler_norm_check(system, n_max).worst,
                request.tolerance("norm-ratio"),
            )
        )
    return verdicts


def _rational_roots(p: Poly) -> List[Rational]:
    return sorted(Rational(r) for r in p.ground_roots())


@verification_suite("fuchs")
def fuchs_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    index_set = _index_set(request.option("D"))
    system = make_multi_indexed(
        model, index_set, request.unsafe, request.warn
    )

    verdict = system.certify()
    verdicts = [
        Verdict(
            "nonsingular",
            verdict.nonsingular,
            verdict.root_count,
            f"deg Xi = {system.xi.degree()}",
        )
    ]
    for n in range(request.int_option("n-max") + 1):
        verdicts.append(
            exact_verdict(f"fuchs({n})", lambda n=n: fuchs_residual(system, n))
        )
        verdicts.append(
            exact_verdict(
                f"deg P_D,{n}",
                lambda n=n: system.poly(n).degree() - (system.ell + n),
            )
        )

    for root in _rational_roots(system.xi):
        verdicts.append(
            exact_verdict(
                f"exponents at {root}",
                lambda root=root: [
                    a - b
                    for a, b in zip(
                        frobenius_exponents(system, root), (0, 3)
                    )
                ],
            )
        )
    return verdicts


@verification_suite("multi-shift")
def multi_shift_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    index_set = _index_set(request.option("D"))
    system = make_multi_indexed(
        model, index_set, request.unsafe, request.warn
    )

    verdicts = [
        exact_verdict(
            f"deformed shift({n})",
            lambda n=n: shift_relations_check(system, n),
        )
        for n in range(1, request.int_option("n-max") + 1)
    ]
    if 0 not in index_set.type_one + index_set.type_two:
        verdicts.append(
            holds_verdict(
                "P_D,0 ~ Xi_D(lambda + delta)",
                lambda: plusdelta_check(system),
                lambda c: f"c = {c}",
            )
        )
    return verdicts


@verification_suite("structural")
def structural_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    index_set = _index_set(request.option("D"), allow_zero=True)
    n_max = request.int_option("n-max")

    verdicts = [
        holds_verdict(
            "structural identities",
            lambda: structural_identities(model, index_set, n_max),
            lambda report: f"{len(report.level_zero)} level 0, "
            f"{len(report.exceptional)} exceptional reductions",
        )
    ]

    if 0 not in index_set.type_one + index_set.type_two:
        system = make_multi_indexed(
            model, index_set, request.unsafe, request.warn
        )
        verdict = system.certify()
        verdicts.append(
            Verdict("nonsingular", verdict.nonsingular, verdict.root_count)
        )
        if verdict.nonsingular:
            verdicts.append(
                numeric_verdict(
                    "weighted orthogonality",
                    lambda: multi_orthogonality_check(system, n_max).worst,
                    request.tolerance("multi-orthogonality"),
                )
            )
    return verdicts


@verification_suite("duality")
def duality_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    pseudo = _integers(request.option("D"))
    top = request.options.get("N")
    top = int(top) if top is not None else None

    return [
        holds_verdict(
            "duality",
            lambda: duality_check(
                model, pseudo, top, request.int_option("n-max")
            ),
            lambda report: f"complement {list(report.complement)}, "
            + ("nonsingular" if report.nonsingular else "singular"),
        )
    ]


@verification_suite("unitarity")
def unitarity_suite(request: SuiteRequest) -> List[Verdict]:
    verdicts = []
    for h in _soliton_strengths(request):
        verdicts.append(
            numeric_verdict(
                f"|t|^2 + |r|^2 = 1 (h={h})",
                lambda h=h: unitarity_residual(h, K_SAMPLES),
                request.tolerance("unitarity"),
            )
        )
        verdicts.append(
            exact_verdict(
                f"r = 0 iff h integer (h={h})",
                lambda h=h: int(soliton_amplitudes(h)[1].vanishes)
                - int(h.is_integer),
            )
        )
    return verdicts


@verification_suite("poles")
def poles_suite(request: SuiteRequest) -> List[Verdict]:
    return [
        holds_verdict(
            f"poles of t (h={h})",
            lambda h=h: pole_scan(h),
            lambda scan: f"{len(scan.kappas)} poles",
        )
        for h in _soliton_strengths(request)
    ]


@verification_suite("shape-amplitude")
def shape_amplitude_suite(request: SuiteRequest) -> List[Verdict]:
    tolerance = request.tolerance("amplitude-ratio")
    verdicts = []
    for h in _soliton_strengths(request):
        verdicts.append(
            numeric_verdict(
                f"t, r under h -> h - 1 (h={h})",
                lambda h=h: max(shape_constraint_check(h, K_SAMPLES)),
                tolerance,
            )
        )
        verdicts.append(
            numeric_verdict(
                f"t, r under h -> -(h + 1) (h={h})",
                lambda h=h: amplitude_symmetry_check(h, K_SAMPLES),
                tolerance,
            )
        )
    return verdicts


def _deformed_unitarity(h, factor: DeformationFactor) -> float:
    t, r = deform_amplitudes(*soliton_amplitudes(h), factor)
    worst = 0.0
    for k in K_SAMPLES:
        total = abs(evaluate_amplitude(r, k)) ** 2
        if t is not None:
            total += abs(evaluate_amplitude(t, k)) ** 2
        worst = max(worst, abs(total - 1))
    return worst


@verification_suite("deformed-amplitude")
def deformed_amplitude_suite(request: SuiteRequest) -> List[Verdict]:
    h = request.system().h
    seeds = [
        SeedSpec.parse(s) for s in str(request.option("seeds")).split(",")
    ]
    factor = DeformationFactor.from_soliton_seeds(h, seeds)
    half = DeformationFactor(factor.plus, side=Side.HALF)
    unitarity = request.tolerance("unitarity")

    verdicts = [
        exact_verdict(
            "factor identity", lambda: deformation_identity_check(factor)
        ),
        numeric_verdict(
            "|factor| = 1",
            lambda: unit_modulus_residual(factor, K_SAMPLES),
            unitarity,
        ),
        numeric_verdict(
            "|factor| = 1 (half line)",
            lambda: unit_modulus_residual(half, K_SAMPLES),
            unitarity,
        ),
        numeric_verdict(
            "deformed |t|^2 + |r|^2 = 1",
            lambda: _deformed_unitarity(h, factor),
            unitarity,
        ),
    ]
    # seed exponents at or below zero add no pole on the upper axis
    if all(p > 0 for p in factor.plus):
        verdicts.append(
            holds_verdict(
                "poles of deformed t",
                lambda: pole_scan(h, factor),
                lambda scan: f"{len(scan.kappas)} poles",
            )
        )
    return verdicts


@verification_suite("kdv")
def kdv_suite(request: SuiteRequest) -> List[Verdict]:
    spec = _reflectionless(request)
    t = request.rational_option("t")

    result = None

    def evolve():
        nonlocal result
        result = kdv_evolve(spec, t, X_SAMPLES)
        return result.max_residual

    verdicts = [
        numeric_verdict(
            f"kdv(t={t})", evolve, request.tolerance("kdv-numeric")
        )
    ]
    if result is not None and result.exact:
        verdicts[0] = replace(verdicts[0], detail="exact cancellation")

    if spec.size == 1:
        verdicts.append(
            holds_verdict(
                "sech^2 profile",
                lambda: single_soliton_check(spec),
                lambda a: f"e^(2 phi) = {a}",
            )
        )
    verdicts.append(
        holds_verdict(
            "u > 0, U < 0",
            lambda: positivity_check(spec, X_SAMPLES),
            lambda report: f"min u {format_float(report.min_u)}",
        )
    )
    return verdicts


def _transmission_modulus(spec: ReflectionlessSpec) -> float:
    t, _ = reflectionless_amplitudes(spec)
    return max(abs(abs(evaluate_amplitude(t, k)) - 1) for k in K_SAMPLES)


@verification_suite("wronskian")
def wronskian_suite(request: SuiteRequest) -> List[Verdict]:
    spec = _reflectionless(request)
    report = None

    def equivalence():
        nonlocal report
        report = wronskian_equivalence(spec, X_SAMPLES)
        return report.deviation

    return [
        numeric_verdict(
            "Darboux = Kay-Moses",
            equivalence,
            request.tolerance("potential-agreement"),
        ),
        numeric_verdict(
            "|t| = 1",
            lambda: _transmission_modulus(spec),
            request.tolerance("unitarity"),
        ),
    ]


@verification_suite("special")
def special_suite(request: SuiteRequest) -> List[Verdict]:
    return [
        holds_verdict(
            f"special soliton(N={size})",
            lambda size=size: special_soliton_check(size),
            lambda spec: "c = " + ", ".join(str(c) for c in spec.cs),
        )
        for size in range(1, request.int_option("N") + 1)
    ]


def _node_count(model: ModelSystem, n: int) -> int:
    grid = GridSpec.for_system(model, points=NODE_POINTS)
    return count_sign_changes(sample_wavefunction(model, grid, n=n)) - n


@verification_suite("numerics")
def numerics_suite(request: SuiteRequest) -> List[Verdict]:
    model = request.system()
    a, b, step = FD_WINDOWS[model.model_id]
    grid = GridSpec.uniform(a, b, step)

    verdicts = [
        numeric_verdict(
            "fd ground state",
            lambda: system_residual(model, 0, grid),
            request.tolerance("fd-base"),
        )
    ]

    count = model.bound_state_count()
    if count is None or count > max(FD_DELETED):
        deformed = krein_adler(model, FD_DELETED)
        verdicts.append(
            numeric_verdict(
                "fd deformed ground state",
                lambda: system_residual(deformed, 0, grid),
                request.tolerance("fd-deformed"),
            )
        )

    for n in _levels(model, request.int_option("n-max")):
        verdicts.append(
            exact_verdict(f"nodes({n})", lambda n=n: _node_count(model, n))
        )

    reflection = request.tolerance("reflection")
    verdicts.append(
        numeric_verdict(
            "log gamma reflection",
            lambda: max(reflection_residual(z) for z in GAMMA_SAMPLES),
            reflection,
        )
    )
    verdicts.append(
        numeric_verdict(
            "log gamma recurrence",
            lambda: max(recurrence_residual(z) for z in GAMMA_SAMPLES),
            reflection,
        )
    )
    return verdicts


@verification_suite("all")
def all_suite(request: SuiteRequest) -> List[Verdict]:
    """
    Every suite on each of its catalogue models at the catalogue defaults
    """
    cases = [
        SuiteRequest(
            name,
            model,
            unsafe=request.unsafe,
            tolerance_scale=request.tolerance_scale,
            warn=request.warn,
        )
        for name in SUITES
        if name != "all"
        for model in (suite_models(name) or [None])
    ]
    return run_cases(cases, jobs=int(request.options.get("jobs") or 1))


class WorkerMap:
    """
    A multiprocessing pool of workers, or the builtin map when jobs <= 1.
    """

    def __init__(self, jobs: int):
        self.jobs = jobs
        if jobs <= 1:
            self.pool = None
            self.map_function = lambda f, x: list(map(f, x))
        else:
            self.pool = mproc.Pool(processes=jobs)
            self.map_function = self.pool.map

    def __enter__(self):
        return self.map_function

    def __exit__(self, exc_type, exc_value, traceback):
        if self.pool is not None:
            self.pool.terminate()


def _case_label(request: SuiteRequest) -> str:
    if request.model is None:
        return request.suite
    return f"{request.suite}[{ModelId.parse(request.model).value}]"


def run_case(request: SuiteRequest) -> List[Verdict]:
    if request.suite not in SUITES:
        raise UsageError(
            f"Unknown suite {request.suite!r}; "
            f"choose from {', '.join(sorted(SUITES))}"
        )
    return SUITES[request.suite](request)


def run_cases(cases: Sequence[SuiteRequest], jobs: int = 1) -> List[Verdict]:
    """
    Runs the cases, in a worker pool when jobs > 1, and merges their
    verdicts in request order, each named after its case.
    """
    if jobs > 1:
        # bound CLI methods do not cross process boundaries
        cases = [replace(c, warn=None) for c in cases]

    with WorkerMap(jobs) as mapper:
        results = mapper(run_case, cases)

    verdicts = []
    for case, found in zip(cases, results):
        label = _case_label(case)
        verdicts.extend(v.qualified(label) for v in found)
    return verdicts


def run_suite(request: SuiteRequest, jobs: int = 1) -> List[Verdict]:
    """
    Runs one suite.  Without --model a model-bound suite runs on each of
    its catalogue models.
    """
    if request.suite not in SUITES:
        raise UsageError(
            f"Unknown suite {request.suite!r}; "
            f"choose from {', '.join(sorted(SUITES))}"
        )
    if request.suite == "all":
        return all_suite(replace(request, options={"jobs": jobs}))

    models = suite_models(request.suite)
    if request.model is not None:
        name = ModelId.parse(request.model).value
        if models and name not in models:
            raise UsageError(
                f"Suite {request.suite} runs on {', '.join(models)}, "
                f"not {name}"
            )
        return run_cases([request])

    if not models:
        return run_cases([request])

    return run_cases(
        [replace(request, model=m) for m in models], jobs=jobs
    )
