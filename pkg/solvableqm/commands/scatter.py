"""
The scatter command gives the transmission and reflection amplitudes of
the soliton potential -h(h+1)/cosh^2 x and of its Darboux deformations.

Invoke as follows::

   solvable-qm scatter --h H [--seeds SEEDS] [--side full|half] [--k K,...]

On the half line only the reflection amplitude exists.
"""

import numpy as np

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    parse_args,
    parse_seeds,
)
from solvableqm.errors import UsageError
from solvableqm.helpers import rational_list_arg
from solvableqm.numeric.tolerances import UNITARITY
from solvableqm.output import ReportDocument
from solvableqm.scattering import (
    DeformationFactor,
    Side,
    deform_amplitudes,
    deformation_identity_check,
    evaluate_amplitude,
    pole_scan,
    soliton_amplitudes,
    unit_modulus_residual,
)
from solvableqm.suites import K_SAMPLES, holds_verdict, numeric_verdict

SUMMARY = "Soliton scattering amplitudes and their deformations"


def _rows(t, r, ks):
    rows = []
    for k in ks:
        t_value = 0j if t is None else evaluate_amplitude(t, k)
        r_value = evaluate_amplitude(r, k)
        rows.append(
            [
                k,
                t_value.real,
                t_value.imag,
                r_value.real,
                r_value.imag,
                abs(t_value) ** 2 + abs(r_value) ** 2,
            ]
        )
    return rows


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("scatter", SUMMARY)
    parser.add_argument(
        "--seeds",
        metavar="SEEDS",
        type=str,
        help="Deform the soliton by these seeds, e.g. vI:0,p:1.",
    )
    parser.add_argument(
        "--side",
        choices=[s.value for s in Side],
        default=Side.FULL.value,
        help="The full line, or the half line x > 0 (default full).",
    )
    parser.add_argument(
        "--k",
        metavar="K1,K2,...",
        type=rational_list_arg,
        help="Real wave numbers at which the amplitudes are evaluated.",
    )
    parsed = parse_args(parser, args, context)
    if parsed.h is None:
        raise UsageError("The scatter command needs the soliton strength --h")

    h = parsed.h
    side = Side(parsed.side)
    ks = (
        np.array([float(k) for k in parsed.k])
        if parsed.k
        else np.asarray(K_SAMPLES)
    )
    if np.any(ks <= 0):
        raise UsageError("Wave numbers must be positive")

    t, r = soliton_amplitudes(h)
    factor = None
    if parsed.seeds:
        factor = DeformationFactor.from_soliton_seeds(
            h, parse_seeds(parsed.seeds), side
        )
        t, r = deform_amplitudes(t, r, factor)
    elif side == Side.HALF:
        raise UsageError("The half line needs a deformation --seeds")

    report = ReportDocument("scatter", echo_inputs(parsed))
    report.results["t"] = "none" if t is None else str(t.simplified())
    report.results["r"] = str(r.simplified())
    report.results["reflectionless"] = r.vanishes
    report.add_section(
        "amplitudes",
        ["k", "Re t", "Im t", "Re r", "Im r", "|t|^2+|r|^2"],
        _rows(t, r, ks),
    )

    if factor is not None:
        report.results["plus"] = list(factor.plus)
        report.results["minus"] = list(factor.minus)
        report.verdicts.append(
            numeric_verdict(
                "|factor| = 1",
                lambda: unit_modulus_residual(factor, ks),
                UNITARITY,
            )
        )

    if side == Side.FULL:
        report.verdicts.append(
            numeric_verdict(
                "|t|^2 + |r|^2 = 1",
                lambda: max(abs(row[-1] - 1) for row in _rows(t, r, ks)),
                UNITARITY,
            )
        )
        if factor is not None and all(
            p == -m for p, m in zip(factor.plus, factor.minus)
        ):
            report.verdicts.append(
                holds_verdict(
                    "t_D/t = (-1)^M r_D/r",
                    lambda: deformation_identity_check(factor),
                    lambda common: f"factor {common}",
                )
            )
        # seed exponents at or below zero add no pole on the upper axis
        if factor is None or all(p > 0 for p in factor.plus):
            report.verdicts.append(
                holds_verdict(
                    "poles of t",
                    lambda: pole_scan(h, factor),
                    lambda scan: "kappa = "
                    + ", ".join(f"{kappa:.12g}" for kappa in scan.kappas),
                )
            )

    return context.client.emit(report)
