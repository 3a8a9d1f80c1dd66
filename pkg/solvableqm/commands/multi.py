"""
The multi command builds a multi-indexed Laguerre or Jacobi system and
checks its structure exactly.

Invoke as follows::

   solvable-qm multi --model L|J --g G [--h H] --D INDEX_SET [--n-max N]

   INDEX_SET - the deleted virtual state degrees, e.g. 1I,2I,1II
"""

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    model_from_args,
    n_max_from_args,
    parse_args,
)
from solvableqm.errors import UsageError
from solvableqm.multi_indexed import (
    IndexSet,
    fuchs_residual,
    make_multi_indexed,
    plusdelta_check,
    shift_relations_check,
)
from solvableqm.output import ReportDocument
from solvableqm.suites import Verdict, exact_verdict, holds_verdict

SUMMARY = "Multi-indexed Laguerre and Jacobi systems: Xi_D and P_D,n"


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("multi", SUMMARY)
    parser.add_argument(
        "--D",
        metavar="INDEX_SET",
        type=str,
        help="The deleted virtual states, e.g. 1I,2II.",
    )
    parser.add_argument(
        "--n-max",
        metavar="N",
        type=int,
        help="The highest degree index n of P_D,n (default 5).",
    )
    parsed = parse_args(parser, args, context)
    if not parsed.D:
        raise UsageError("The multi command needs the index set --D")

    model = model_from_args(parsed)
    n_max = n_max_from_args(parsed)
    index_set = IndexSet.parse(parsed.D)
    system = make_multi_indexed(
        model, index_set, bool(parsed.unsafe), context.client.warn
    )

    report = ReportDocument("multi", echo_inputs(parsed))
    report.results["system"] = repr(system)
    report.results["ell"] = system.ell
    report.results["shifted-params"] = system.shifted_params.as_dict()
    report.results["xi"] = system.xi
    report.add_section(
        "polynomials",
        ["n", "degree", "energy", "coefficients"],
        [
            [n, system.poly(n).degree(), system.energy(n), system.poly(n)]
            for n in range(n_max + 1)
        ],
    )

    verdict = system.certify()
    if system.unsafe:
        report.results["nonsingular"] = verdict.nonsingular
    else:
        report.verdicts.append(
            Verdict(
                "nonsingular",
                verdict.nonsingular,
                verdict.root_count,
                f"{verdict.root_count} zeros of Xi_D inside the interval",
            )
        )

    for n in range(n_max + 1):
        report.verdicts.append(
            exact_verdict(f"fuchs({n})", lambda n=n: fuchs_residual(system, n))
        )
    for n in range(1, n_max + 1):
        report.verdicts.append(
            exact_verdict(
                f"deformed shift({n})",
                lambda n=n: shift_relations_check(system, n),
            )
        )
    report.verdicts.append(
        holds_verdict(
            "P_D,0 ~ Xi_D(lambda + delta)",
            lambda: plusdelta_check(system),
            lambda c: f"c = {c}",
        )
    )

    return context.client.emit(report)
