"""
Argument parser for solvable-qm
"""

from rich import box
from rich import print as rprint
from rich.table import Table

from solvableqm import commands, suites

from .configuration import FORMATS


def register_args(parser):
    """
    Register static command arguments
    """
    parser.add_argument(
        "command",
        metavar="COMMAND",
        nargs="?",
        type=str,
        help="The command to run.",
    )
    parser.add_argument(
        "--help",
        action="store_true",
        help="Display information about a command or the CLI overall.",
    )
    parser.add_argument(
        "--version",
        "-v",
        action="store_true",
        help="Prints version information and exits.",
    )
    parser.add_argument(
        "--config",
        metavar="PATH",
        type=str,
        help="Read defaults from this config file.",
    )
    parser.add_argument(
        "--skip-config",
        action="store_true",
        help="Ignore any config file.",
    )

    parser.add_argument(
        "--json",
        dest="format",
        action="store_const",
        const="json",
        help="Display output as one JSON document.",
    )
    parser.add_argument(
        "--csv",
        dest="format",
        action="store_const",
        const="csv",
        help="Display output as CSV tables with a header row.",
    )
    parser.add_argument(
        "--table",
        dest="format",
        action="store_const",
        const="table",
        help="Display output as tables.",
    )
    parser.add_argument(
        "--markdown",
        dest="format",
        action="store_const",
        const="markdown",
        help="Display output in Markdown format.",
    )
    parser.add_argument(
        "--ascii-table",
        dest="format",
        action="store_const",
        const="ascii-table",
        help="Display output in an ASCII table.",
    )
    parser.add_argument(
        "--format",
        metavar="FORMAT",
        choices=FORMATS,
        help=f"The output format: {', '.join(FORMATS)}.",
    )
    parser.add_argument(
        "--pretty",
        action="store_true",
        help="If set, pretty-print JSON output.",
    )
    parser.add_argument(
        "--no-headers",
        action="store_true",
        help="If set, does not display headers in tables.",
    )
    parser.add_argument(
        "--column-width",
        type=int,
        default=None,
        help="Sets the maximum width of each column in outputted tables. "
        "By default, columns are dynamically sized to fit the terminal.",
    )
    parser.add_argument(
        "--output",
        metavar="PATH",
        type=str,
        help="Write the report to PATH instead of stdout.",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        default=None,
        help="Print diagnostic messages to stderr.",
    )
    parser.add_argument(
        "--suppress-warnings",
        action="store_true",
        default=None,
        help="Suppress warnings that are intended for human users. "
        "This is useful for scripting the CLI's behavior.",
    )

    return parser


def help_with_commands():
    """
    Prints the commands, the verification suites and the environment
    variables solvable-qm reads.
    """
    print("\nCommands:")
    table = Table(show_header=True, header_style="", box=box.SQUARE)
    table.add_column("Name")
    table.add_column("Description")
    for name in commands.available_local:
        table.add_row(name, commands.summary(name))
    rprint(table)

    print("\nVerification suites (solvable-qm verify SUITE):")
    table = Table(show_header=False)
    for name in suites.SUITES:
        summary = (
            "every suite at the catalogue defaults"
            if name == "all"
            else suites.suite_summary(name)
        )
        table.add_row(name, summary)
    rprint(table)

    print("\nEnvironment variables:")
    env_variables = {
        "XDG_CONFIG_HOME": "The directory searched for the solvable-qm "
        "config file when no legacy ~/.solvable-qm exists.",
        "NO_COLOR": "Disables colored diagnostics.",
    }
    table = Table(show_header=True, header_style="", box=box.SQUARE)
    table.add_column("Name")
    table.add_column("Description")
    for k, v in env_variables.items():
        table.add_row(k, v)
    rprint(table)
