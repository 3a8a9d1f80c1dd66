"""
The soliton command builds the Kay-Moses reflectionless potential of N
bound states and checks its Darboux construction and KdV evolution.

Invoke as follows::

   solvable-qm soliton --k K1,...,KN --c C1,...,CN [--t T]
   solvable-qm soliton --special N [--t T]

   K - 0 < k_1 < ... < k_N, the bound states sit at -k_j^2
   C - positive norming constants
   N - k_j = j with the constants that give -N(N+1)/cosh^2 x
"""

from sympy import Rational

from solvableqm.commands import command_parser, echo_inputs, parse_args
from solvableqm.errors import UsageError
from solvableqm.helpers import first_not_none, rational_arg, rational_list_arg
from solvableqm.numeric.tolerances import KDV_NUMERIC, POTENTIAL_AGREEMENT
from solvableqm.output import ReportDocument, format_float
from solvableqm.scattering import (
    ReflectionlessSpec,
    kay_moses,
    kdv_evolve,
    positivity_check,
    single_soliton_check,
    special_soliton,
    special_soliton_check,
    wronskian_equivalence,
)
from solvableqm.suites import (
    X_SAMPLES,
    Verdict,
    checked_result,
    holds_verdict,
)

SUMMARY = "Kay-Moses reflectionless potentials, KdV solitons"


def _spec(parsed) -> ReflectionlessSpec:
    if parsed.special is not None:
        if parsed.k or parsed.c:
            raise UsageError("--special fixes k and c; drop --k and --c")
        return special_soliton(parsed.special)
    if not parsed.k:
        raise UsageError("Give --k and --c, or --special N")
    return ReflectionlessSpec(tuple(parsed.k), tuple(parsed.c or ()))


def _equivalence(spec):
    equivalence, verdict = checked_result(
        "Darboux = Kay-Moses",
        lambda: wronskian_equivalence(spec, X_SAMPLES),
    )
    if equivalence is None:
        return None, verdict
    deviation = equivalence.deviation
    return equivalence, Verdict(
        verdict.name,
        deviation <= POTENTIAL_AGREEMENT,
        deviation,
        f"tolerance {format_float(POTENTIAL_AGREEMENT)}",
    )


def _kdv(spec, t):
    evolved, verdict = checked_result(
        f"kdv(t={t})", lambda: kdv_evolve(spec, t, X_SAMPLES)
    )
    if evolved is None:
        return verdict
    if evolved.exact:
        return Verdict(verdict.name, True, Rational(0), "exact cancellation")
    return Verdict(
        verdict.name,
        True,
        evolved.max_residual,
        f"tolerance {format_float(KDV_NUMERIC)}",
    )


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("soliton", SUMMARY)
    parser.add_argument(
        "--k",
        metavar="K1,K2,...",
        type=rational_list_arg,
        help="The wave numbers k_j, strictly increasing.",
    )
    parser.add_argument(
        "--c",
        metavar="C1,C2,...",
        type=rational_list_arg,
        help="The positive norming constants c_j.",
    )
    parser.add_argument(
        "--special",
        metavar="N",
        type=int,
        help="Use the parameters that give -N(N+1)/cosh^2 x.",
    )
    parser.add_argument(
        "--t",
        metavar="T",
        type=rational_arg,
        help="The KdV time checked (default 0; negative as --t=-1/4).",
    )
    parsed = parse_args(parser, args, context)

    spec = _spec(parsed)
    t = first_not_none(parsed.t, Rational(0))

    report = ReportDocument("soliton", echo_inputs(parsed))
    report.results["k"] = list(spec.ks)
    report.results["c"] = list(spec.cs)
    report.results["energies"] = [-(k**2) for k in spec.ks]
    report.add_section(
        "u",
        ["mu", "nu", "coefficient"],
        [
            [mu, nu, c]
            for (mu, nu), c in sorted(kay_moses(spec).u.terms.items())
        ],
    )

    equivalence, verdict = _equivalence(spec)
    report.verdicts.append(verdict)
    if equivalence is not None:
        report.results["seed-coefficients"] = list(
            equivalence.seed_coefficients
        )
        report.results["vandermonde"] = equivalence.vandermonde
        report.results["plane-wave-plus"] = equivalence.plane_wave_plus
        report.results["plane-wave-minus"] = equivalence.plane_wave_minus

    report.verdicts.append(
        holds_verdict(
            "u > 0, U < 0",
            lambda: positivity_check(spec, X_SAMPLES),
            lambda found: f"min u {format_float(found.min_u)}",
        )
    )
    report.verdicts.append(_kdv(spec, t))
    if spec.size == 1:
        report.verdicts.append(
            holds_verdict(
                "sech^2 profile",
                lambda: single_soliton_check(spec),
                lambda a: f"e^(2 phi) = {a}",
            )
        )
    if parsed.special is not None:
        report.verdicts.append(
            holds_verdict(
                f"-N(N+1)/cosh^2 x (N={parsed.special})",
                lambda: special_soliton_check(parsed.special),
            )
        )

    return context.client.emit(report)
