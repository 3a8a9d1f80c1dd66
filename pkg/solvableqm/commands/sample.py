"""
The sample command writes plot data: one sample per line, CSV by default.

Invoke as follows::

   solvable-qm sample potential --model MODEL [SYSTEM ARGS] [GRID ARGS]
   solvable-qm sample potential --k K1,K2 --c C1,C2 [--t T] [GRID ARGS]
   solvable-qm sample wavefunction --model MODEL (--n N | --seed SEED)
   solvable-qm sample amplitudes --h H [--seeds SEEDS] [--kmin K] [--kmax K]

Columns:
   potential     x, U, flagged
   wavefunction  x, psi, flagged
   amplitudes    k, |t|, |r|, |t|^2+|r|^2

Flagged samples sit on or next to a pole of a deformed system.
"""

import numpy as np

from solvableqm.commands import (
    DEFAULT_POINTS,
    command_parser,
    echo_inputs,
    grid_from_args,
    model_from_args,
    parse_args,
    parse_seeds,
    register_system_args,
    system_from_args,
)
from solvableqm.errors import UsageError
from solvableqm.helpers import (
    first_not_none,
    rational_arg,
    rational_list_arg,
    register_grid_args_shared,
)
from solvableqm.numeric import (
    count_sign_changes,
    sample_potential,
    sample_wavefunction,
)
from solvableqm.numeric.tolerances import MIN_NODE_SAMPLES
from solvableqm.output import OutputMode, ReportDocument
from solvableqm.scattering import (
    DeformationFactor,
    ReflectionlessSpec,
    deform_amplitudes,
    evaluate_amplitude,
    kay_moses,
    soliton_amplitudes,
)
from solvableqm.scattering.reflectionless import KDV_X_RANGE

SUMMARY = "Potential, wavefunction and amplitude samples for plotting"

KINDS = ("potential", "wavefunction", "amplitudes")

K_RANGE = (0.05, 5.0)


def _x_points(parsed) -> np.ndarray:
    points = first_not_none(parsed.points, DEFAULT_POINTS)
    a = first_not_none(parsed.xmin, KDV_X_RANGE[0])
    b = first_not_none(parsed.xmax, KDV_X_RANGE[1])
    if not a < b:
        raise UsageError(f"Empty interval ({a}, {b})")
    return np.linspace(a, b, points)


def _kay_moses_potential(report, parsed):
    spec = ReflectionlessSpec(tuple(parsed.k), tuple(parsed.c or ()))
    t = first_not_none(parsed.t, 0)
    potential = kay_moses(spec, dressed=parsed.t is not None).potential
    x = _x_points(parsed)
    values = potential.evaluate(x, float(t))

    report.results["solitons"] = spec.size
    report.add_section(
        "potential",
        ["x", "U", "flagged"],
        [[a, v, not np.isfinite(v)] for a, v in zip(x, values)],
    )


def _potential(report, parsed, context):
    if parsed.k is not None:
        _kay_moses_potential(report, parsed)
        return

    model = model_from_args(parsed)
    system = system_from_args(parsed, model, context.client.warn)
    samples = sample_potential(system, grid_from_args(parsed, system))
    if any(s.flagged for s in samples):
        context.client.warn(f"The potential of {system!r} has poles")

    report.results["system"] = repr(system)
    report.add_section(
        "potential", ["x", "U", "flagged"], [list(s) for s in samples]
    )


def _wavefunction(report, parsed, context):
    if (parsed.n is None) == (parsed.seed is None):
        raise UsageError("Give exactly one of --n and --seed")

    model = model_from_args(parsed)
    system = system_from_args(parsed, model, context.client.warn)
    if parsed.seed is not None and system is not model:
        raise UsageError("--seed samples seed solutions of base systems")

    samples = sample_wavefunction(
        system,
        grid_from_args(parsed, system),
        n=parsed.n,
        seed=parsed.seed,
        warn=context.client.warn,
    )

    report.results["system"] = repr(system)
    if len(samples) >= MIN_NODE_SAMPLES:
        report.results["sign-changes"] = count_sign_changes(samples)
    report.add_section(
        "wavefunction", ["x", "psi", "flagged"], [list(s) for s in samples]
    )


def _amplitudes(report, parsed):
    if parsed.h is None:
        raise UsageError("Amplitude scans need the soliton strength --h")

    t, r = soliton_amplitudes(parsed.h)
    if parsed.seeds:
        factor = DeformationFactor.from_soliton_seeds(
            parsed.h, parse_seeds(parsed.seeds)
        )
        t, r = deform_amplitudes(t, r, factor)

    kmin = first_not_none(parsed.kmin, K_RANGE[0])
    kmax = first_not_none(parsed.kmax, K_RANGE[1])
    if not 0 < kmin < kmax:
        raise UsageError(f"Need 0 < kmin < kmax, got {kmin}, {kmax}")

    rows = []
    points = first_not_none(parsed.points, DEFAULT_POINTS)
    for k in np.linspace(kmin, kmax, points):
        t_abs = abs(evaluate_amplitude(t, k))
        r_abs = abs(evaluate_amplitude(r, k))
        rows.append([k, t_abs, r_abs, t_abs**2 + r_abs**2])

    report.results["t"] = str(t)
    report.results["r"] = str(r)
    report.add_section("amplitudes", ["k", "|t|", "|r|", "|t|^2+|r|^2"], rows)


def call(args, context):
    """
    Invokes this command
    """
    parser = register_grid_args_shared(
        register_system_args(command_parser("sample", SUMMARY))
    )
    parser.add_argument(
        "what",
        metavar="WHAT",
        choices=KINDS,
        help=f"What to sample: {', '.join(KINDS)}.",
    )
    parser.add_argument(
        "--n", metavar="N", type=int, help="The level to sample."
    )
    parser.add_argument(
        "--seed",
        metavar="SEED",
        type=str,
        help="A seed solution to sample instead of a level, e.g. vI:2.",
    )
    parser.add_argument(
        "--k",
        metavar="K1,K2,...",
        type=rational_list_arg,
        help="Kay-Moses wave numbers; samples the reflectionless "
        "potential instead of a model.",
    )
    parser.add_argument(
        "--c",
        metavar="C1,C2,...",
        type=rational_list_arg,
        help="Kay-Moses norming constants, one per wave number.",
    )
    parser.add_argument(
        "--t",
        metavar="T",
        type=rational_arg,
        help="KdV time of the dressed Kay-Moses potential "
        "(negative values as --t=-1/4).",
    )
    parser.add_argument(
        "--kmin", metavar="K", type=float, help="Smallest k of a scan."
    )
    parser.add_argument(
        "--kmax", metavar="K", type=float, help="Largest k of a scan."
    )
    parsed = parse_args(parser, args, context)

    context.client.default_mode(OutputMode.csv)

    report = ReportDocument("sample", echo_inputs(parsed), stream=parsed.what)
    if parsed.what == "potential":
        _potential(report, parsed, context)
    elif parsed.what == "wavefunction":
        _wavefunction(report, parsed, context)
    else:
        _amplitudes(report, parsed)

    return context.client.emit(report)
