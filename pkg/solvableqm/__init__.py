#!/usr/local/bin/python3
"""
Argument parser for solvable-qm
"""

import argparse
import sys

from solvableqm import commands

from .arg_helpers import help_with_commands, register_args
from .cli import CLI
from .errors import SolvableQMError
from .version import __version__

VERSION = __version__


def main():
    """
    Handle incoming command arguments
    """
    parser = argparse.ArgumentParser(
        "solvable-qm",
        add_help=False,
        allow_abbrev=False,
        description="Exact constructions and checks for solvable one "
        "dimensional quantum mechanics.\n\nAlias: sqm",
    )
    parsed, args = register_args(parser).parse_known_args()

    if parsed.version:
        print(f"solvable-qm {VERSION}")
        sys.exit(0)

    # handle a help for the CLI
    if parsed.command is None:
        parser.print_help()
        help_with_commands()
        sys.exit(0)

    # the command prints its own help
    if parsed.help:
        args.append("--help")

    try:
        cli = CLI(
            VERSION,
            parsed.config,
            skip_config=parsed.skip_config or parsed.help,
        )
        cli.configure(parsed)
        code = commands.invoke(
            parsed.command, args, commands.CommandContext(cli)
        )
    except SolvableQMError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        sys.exit(exc.exit_code)

    sys.exit(code)
