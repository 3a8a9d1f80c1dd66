"""
The spectrum command lists the exact energies of a base system or of one
of its deformations.

Invoke as follows::

   solvable-qm spectrum --model MODEL [--g G] [--h H] [--n-max N]
                        [--delete LEVELS | --seeds SEEDS | --D INDEX_SET]

Energies are exact rationals; the value column repeats them as doubles.
Pseudo virtual seeds add one eigenstate each, listed under their seed.
"""

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    levels_of,
    model_from_args,
    n_max_from_args,
    parse_args,
    register_system_args,
    system_from_args,
)
from solvableqm.darboux import DeformedSystem, SeedClass
from solvableqm.output import ReportDocument

SUMMARY = "Exact energies of a base or deformed system"


def _added_states(system):
    if not isinstance(system, DeformedSystem):
        return []
    return [s for s in system.seeds if s.classification == SeedClass.PSEUDO]


def _bound_states(system, model):
    count = model.bound_state_count()
    if count is None:
        return "infinite"
    deleted = getattr(system, "deleted", ())
    return count - len(deleted) + len(_added_states(system))


def call(args, context):
    """
    Invokes this command
    """
    parser = register_system_args(command_parser("spectrum", SUMMARY))
    parser.add_argument(
        "--n-max",
        metavar="N",
        type=int,
        help="The highest base level listed (default 5).",
    )
    parsed = parse_args(parser, args, context)

    model = model_from_args(parsed)
    system = system_from_args(parsed, model, context.client.warn)
    n_max = n_max_from_args(parsed)

    rows = [
        [n, system.energy(n), float(system.energy(n))]
        for n in levels_of(system, n_max)
    ]
    rows.extend(
        [str(seed.spec), seed.energy, float(seed.energy)]
        for seed in _added_states(system)
    )
    rows.sort(key=lambda row: row[1])

    report = ReportDocument("spectrum", echo_inputs(parsed))
    report.results["system"] = repr(system)
    report.results["bound-states"] = _bound_states(system, model)
    report.add_section("spectrum", ["level", "energy", "value"], rows)

    context.client.debug(f"Listed {len(rows)} levels of {system!r}")
    return context.client.emit(report)
