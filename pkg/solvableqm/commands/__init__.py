"""
The solvable-qm subcommands.

Every module in this package is a command: it exposes SUMMARY and
call(args, context), parses its own arguments and returns the process
exit code.
"""

import argparse
from importlib import import_module
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from solvableqm.cli import CLI
from solvableqm.darboux import SeedSpec, deform_system, krein_adler
from solvableqm.errors import UsageError
from solvableqm.helpers import (
    first_not_none,
    int_list_arg,
    register_model_args_shared,
)
from solvableqm.models import ModelSystem, make_model
from solvableqm.multi_indexed import IndexSet, make_multi_indexed
from solvableqm.numeric import GridSpec

PROG = "solvable-qm"

DEFAULT_N_MAX = 5

# odd, so symmetric windows sample x = 0
DEFAULT_POINTS = 1025

this_file = Path(__file__)
reserved_files = {this_file}


def is_command(f: Path) -> bool:
    """
    Determine if the file is a solvable-qm command module.
    """
    return f.suffix == ".py" and f not in reserved_files and f.name[0] != "_"


available_local = sorted(
    f.stem for f in Path.iterdir(this_file.parent) if is_command(f)
)


def _module(name: str):
    return import_module("solvableqm.commands." + name)


def summary(name: str) -> str:
    return _module(name).SUMMARY


def invoke(name: str, args: List[str], context: "CommandContext") -> int:
    """
    Given the command name, runs the command and returns its exit code
    """
    if name not in available_local:
        raise UsageError(
            f"Unknown command {name!r}; "
            f"choose from {', '.join(available_local)}"
        )
    context.client.debug(f"Running {name} with {args}")
    return _module(name).call(args, context)


class CommandContext:  # pylint: disable=too-few-public-methods
    """
    The context handed to every command: the CLI it runs under.
    """

    def __init__(self, client: CLI):
        self.client = client


def inherit_command_args(parser: argparse.ArgumentParser):
    """
    Adds the model selection arguments every command understands.
    """
    return register_model_args_shared(parser)


def command_parser(name: str, description: str) -> argparse.ArgumentParser:
    """
    The argument parser of one command, with the shared model arguments.
    """
    return inherit_command_args(
        argparse.ArgumentParser(
            f"{PROG} {name}",
            description=description,
            add_help=True,
            allow_abbrev=False,
        )
    )


def register_system_args(
    parser: argparse.ArgumentParser, multi_indexed: bool = True
):
    """
    Add the arguments that deform the selected base system.  --D only
    when the command builds multi-indexed systems.
    """
    parser.add_argument(
        "--delete",
        metavar="LEVELS",
        type=int_list_arg,
        help="Krein-Adler: delete these eigenlevels, e.g. 1,2.",
    )
    parser.add_argument(
        "--seeds",
        metavar="SEEDS",
        type=str,
        help="Darboux seeds in order, e.g. e:1,vI:2,p:3.",
    )
    if multi_indexed:
        parser.add_argument(
            "--D",
            metavar="INDEX_SET",
            type=str,
            help="Multi-indexed deletion of virtual states, e.g. 1I,2II.",
        )

    return parser


def parse_seeds(text: str) -> List[SeedSpec]:
    return [SeedSpec.parse(s) for s in text.split(",") if s.strip()]


def parse_args(
    parser: argparse.ArgumentParser,
    args: List[str],
    context: CommandContext,
) -> argparse.Namespace:
    """
    Parses a command line and fills unset flags from the config file.
    """
    parsed = parser.parse_args(args)
    return context.client.apply_defaults(parsed)


def model_from_args(parsed: argparse.Namespace) -> ModelSystem:
    if parsed.model is None:
        raise UsageError("--model is required (H, L, J or Soliton)")
    return make_model(parsed.model, g=parsed.g, h=parsed.h)


def system_from_args(
    parsed: argparse.Namespace,
    model: ModelSystem,
    warn: Optional[Callable[[str], None]] = None,
):
    """
    The base model, or its deformation by --delete, --seeds or --D.
    """
    chosen = [
        f"--{key}"
        for key in ("delete", "seeds", "D")
        if getattr(parsed, key, None)
    ]
    if len(chosen) > 1:
        raise UsageError(f"Choose one of {', '.join(chosen)}")

    unsafe = bool(parsed.unsafe)
    if getattr(parsed, "D", None):
        index_set = IndexSet.parse(parsed.D)
        return make_multi_indexed(model, index_set, unsafe, warn)
    if getattr(parsed, "delete", None):
        return krein_adler(model, parsed.delete, unsafe, warn)
    if getattr(parsed, "seeds", None):
        return deform_system(model, parse_seeds(parsed.seeds), unsafe)
    return model


def grid_from_args(parsed: argparse.Namespace, system) -> GridSpec:
    """
    --xmin/--xmax select a finite window; otherwise the system's whole
    x interval is mapped.
    """
    points = parsed.points if parsed.points is not None else DEFAULT_POINTS
    if parsed.xmin is None and parsed.xmax is None:
        return GridSpec.for_system(system, points)
    if parsed.xmin is None or parsed.xmax is None:
        raise UsageError("Give both --xmin and --xmax, or neither")
    return GridSpec.for_system(system, points, (parsed.xmin, parsed.xmax))


def echo_inputs(parsed: argparse.Namespace, *skip: str) -> Dict[str, Any]:
    """
    The flags a command ran with, keyed by their dashed names.
    """
    return {
        key.replace("_", "-"): value
        for key, value in sorted(vars(parsed).items())
        if value is not None and key not in skip
    }


def levels_of(system, n_max: int) -> List[int]:
    """
    The retained levels up to n_max of a base or deformed system.
    """
    if hasattr(system, "levels"):
        return system.levels(n_max)
    base = getattr(system, "base", system)
    count = base.bound_state_count()
    top = n_max if count is None else min(n_max, count - 1)
    return list(range(top + 1))


def n_max_from_args(parsed: argparse.Namespace) -> int:
    n_max = first_not_none(parsed.n_max, DEFAULT_N_MAX)
    if n_max < 0:
        raise UsageError(f"--n-max must be non-negative, got {n_max}")
    return n_max
