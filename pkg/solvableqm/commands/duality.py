"""
The duality command compares a pseudo virtual state deletion with the
Krein-Adler deletion of the complementary eigenstates of the system at
lambda - (N + 1) delta.

Invoke as follows::

   solvable-qm duality --model H|L|J [--g G] [--h H] --D D1,D2 [--N N]

   D1,D2 - the pseudo virtual state degrees
   N     - the top of the complement range, max D by default
"""

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    model_from_args,
    n_max_from_args,
    parse_args,
)
from solvableqm.errors import UsageError
from solvableqm.helpers import int_list_arg
from solvableqm.multi_indexed import duality_check
from solvableqm.output import ReportDocument
from solvableqm.suites import checked_result

SUMMARY = "Pseudo virtual state and eigenstate deletion duality"


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("duality", SUMMARY)
    parser.add_argument(
        "--D",
        metavar="D1,D2,...",
        type=int_list_arg,
        help="The deleted pseudo virtual state degrees, e.g. 0,2.",
    )
    parser.add_argument(
        "--N",
        metavar="N",
        type=int,
        help="The top of the complement range (default max D).",
    )
    parser.add_argument(
        "--n-max",
        metavar="N",
        type=int,
        help="Eigenfunctions compared on both sides (default 5).",
    )
    parsed = parse_args(parser, args, context)
    if not parsed.D:
        raise UsageError("The duality command needs the degrees --D")

    model = model_from_args(parsed)
    found, verdict = checked_result(
        "duality",
        lambda: duality_check(
            model, parsed.D, parsed.N, n_max_from_args(parsed)
        ),
        lambda found: f"complement {list(found.complement)}",
    )

    report = ReportDocument("duality", echo_inputs(parsed), verdicts=[verdict])
    report.results["model"] = repr(model)
    if found is not None:
        report.results["top"] = found.top
        report.results["complement"] = list(found.complement)
        report.results["wronskian-constant"] = found.wronskian_constant
        report.results["nonsingular"] = found.nonsingular
        report.results["first-violation"] = found.first_violation
        report.add_section(
            "eigenfunctions",
            ["n", "constant"],
            sorted(found.eigen_constants.items()),
        )

    return context.client.emit(report)
