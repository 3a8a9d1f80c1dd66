"""
The verify command runs one verification suite and exits 0 only when
every check passes.

Invoke as follows::

   solvable-qm verify SUITE [--model MODEL] [--g G] [--h H] [OPTIONS]

   SUITE - a suite from `solvable-qm --help`, or all

Without --model a suite runs on each model it supports.  Options not
given fall back to the suite's catalogue defaults; --tolerance-scale
multiplies the numeric tolerances, never the exact checks.
"""

from solvableqm.commands import command_parser, echo_inputs, parse_args
from solvableqm.errors import UsageError
from solvableqm.helpers import first_not_none
from solvableqm.models import ModelParams
from solvableqm.numeric.tolerances import TOLERANCES
from solvableqm.output import ReportDocument
from solvableqm.suites import SUITES, SuiteRequest, run_suite

SUMMARY = "Run a verification suite; exit 1 if any check fails"

# suite options passed through as text, parsed by the suite
SUITE_OPTIONS = ("n-max", "D", "N", "k", "c", "t", "seeds", "s", "h-values")


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("verify", SUMMARY)
    parser.add_argument(
        "suite",
        metavar="SUITE",
        choices=sorted(SUITES),
        help="The suite to run.",
    )
    parser.add_argument(
        "--n-max", metavar="N", type=int, help="The highest level checked."
    )
    parser.add_argument(
        "--D",
        metavar="SET",
        type=str,
        help="A deleted level or index set, e.g. 1,2 or 1I,2II.",
    )
    parser.add_argument(
        "--N", metavar="N", type=str, help="The duality top or a soliton count."
    )
    parser.add_argument(
        "--k", metavar="K1,K2,...", type=str, help="Soliton wave numbers."
    )
    parser.add_argument(
        "--c", metavar="C1,C2,...", type=str, help="Soliton norming constants."
    )
    parser.add_argument(
        "--t",
        metavar="T",
        type=str,
        help="A KdV time (negative values as --t=-1/4).",
    )
    parser.add_argument(
        "--seeds", metavar="SEEDS", type=str, help="Deformation seeds."
    )
    parser.add_argument(
        "--s", metavar="S", type=str, help="The highest Crum tower checked."
    )
    parser.add_argument(
        "--h-values",
        metavar="H1,H2,...",
        type=str,
        help="Soliton strengths of the scattering suites.",
    )
    parser.add_argument(
        "--tolerance-scale",
        metavar="SCALE",
        type=float,
        help="Multiply every numeric tolerance by SCALE.",
    )
    parser.add_argument(
        "--jobs",
        metavar="JOBS",
        type=int,
        help="Run the cases of a suite in this many processes.",
    )
    parsed = parse_args(parser, args, context)

    scale = first_not_none(parsed.tolerance_scale, 1.0)
    if not scale > 0:
        raise UsageError(f"--tolerance-scale must be positive, got {scale}")
    jobs = first_not_none(parsed.jobs, 1)
    if jobs < 1:
        raise UsageError(f"--jobs must be at least 1, got {jobs}")

    options = {
        key: getattr(parsed, key.replace("-", "_")) for key in SUITE_OPTIONS
    }
    request = SuiteRequest(
        parsed.suite,
        parsed.model,
        ModelParams(g=parsed.g, h=parsed.h),
        {k: v for k, v in options.items() if v is not None},
        unsafe=bool(parsed.unsafe),
        tolerance_scale=scale,
        warn=context.client.warn,
    )

    verdicts = run_suite(request, jobs)
    failed = [v for v in verdicts if not v.passed]
    context.client.debug(
        f"{parsed.suite}: {len(verdicts) - len(failed)}/{len(verdicts)} passed"
    )

    inputs = echo_inputs(parsed)
    inputs["tolerances"] = {k: v * scale for k, v in sorted(TOLERANCES.items())}
    report = ReportDocument("verify", inputs, verdicts=verdicts)
    report.results["checks"] = len(verdicts)
    report.results["failed"] = len(failed)

    return context.client.emit(report)
