"""
The deform command builds a Darboux deformation of a base system and
checks it exactly.

Invoke as follows::

   solvable-qm deform --model MODEL --seeds SEEDS [--n-max N] [--unsafe]
   solvable-qm deform --model MODEL --delete LEVELS [--n-max N]
   solvable-qm deform --model MODEL --crum S [--n-max N]

   SEEDS  - ordered seeds, e.g. e:1,vI:2,vII:0,p:3,os:4
   LEVELS - the eigenlevels a Krein-Adler deletion removes, e.g. 1,2
   S      - the height of a Crum tower, deleting levels 0..S-1
"""

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    levels_of,
    model_from_args,
    n_max_from_args,
    parse_args,
    parse_seeds,
    register_system_args,
    system_from_args,
)
from solvableqm.darboux import (
    SeedClass,
    certify_nonsingular,
    crum_tower,
    norm_ratio,
    order_independent,
)
from solvableqm.errors import UsageError
from solvableqm.output import ReportDocument
from solvableqm.suites import Verdict, checked_result, exact_verdict

SUMMARY = "Darboux, Krein-Adler and Crum deformations with exact checks"


def _build(parsed, model, n_max, context):
    """
    The deformed system and the verdicts its construction produced.
    """
    given = [
        flag
        for flag, value in (
            ("--seeds", parsed.seeds),
            ("--delete", parsed.delete),
            ("--crum", parsed.crum),
        )
        if value
    ]
    if len(given) != 1:
        raise UsageError("Give exactly one of --seeds, --delete and --crum")

    if parsed.crum is None:
        return system_from_args(parsed, model, context.client.warn), []

    tower, verdict = checked_result(
        f"crum(s={parsed.crum})",
        lambda: crum_tower(model, parsed.crum, n_max),
        lambda found: f"{len(found.constants)} eigenfunctions matched",
    )
    return (tower.system if tower else None), [verdict]


def _nonsingular(report, system, unsafe):
    verdict = certify_nonsingular(system)
    detail = f"{verdict.root_count} real zeros of the denominator"
    if unsafe:
        report.results["nonsingular"] = verdict.nonsingular
        report.results["real-zeros"] = verdict.root_count
        return []
    return [
        Verdict("nonsingular", verdict.nonsingular, verdict.root_count, detail)
    ]


def _levels(system, n_max):
    rows = []
    for n in levels_of(system, n_max):
        ratio = norm_ratio(system, n) if system.deleted else None
        rows.append([n, system.energy(n), ratio])
    return rows


def call(args, context):
    """
    Invokes this command
    """
    parser = register_system_args(
        command_parser("deform", SUMMARY), multi_indexed=False
    )
    parser.add_argument(
        "--crum",
        metavar="S",
        type=int,
        help="Delete the lowest S levels and compare with the shifted model.",
    )
    parser.add_argument(
        "--n-max",
        metavar="N",
        type=int,
        help="The highest base level checked (default 5).",
    )
    parsed = parse_args(parser, args, context)

    model = model_from_args(parsed)
    n_max = n_max_from_args(parsed)
    system, verdicts = _build(parsed, model, n_max, context)

    report = ReportDocument("deform", echo_inputs(parsed))
    report.verdicts.extend(verdicts)
    if system is None:
        return context.client.emit(report)

    report.results["system"] = repr(system)
    report.add_section(
        "seeds",
        ["seed", "class", "energy"],
        [[str(s.spec), s.classification, s.energy] for s in system.seeds],
    )
    report.results["denominator"] = system.denominator()
    report.add_section(
        "levels", ["n", "energy", "norm ratio"], _levels(system, n_max)
    )

    report.verdicts.extend(
        _nonsingular(report, system, bool(parsed.unsafe or system.unsafe))
    )
    for n in levels_of(system, n_max):
        report.verdicts.append(
            exact_verdict(
                f"deformed eigen({n})", lambda n=n: system.eigen_residual(n)
            )
        )
    for j, seed in enumerate(system.seeds):
        if seed.classification == SeedClass.PSEUDO:
            report.verdicts.append(
                exact_verdict(
                    f"added eigen({seed.spec})",
                    lambda j=j: system.extra_residual(j),
                )
            )

    if parsed.seeds and len(system.seeds) > 1:
        specs = parse_seeds(parsed.seeds)
        same, verdict = checked_result(
            "order-independent", lambda: order_independent(model, specs)
        )
        if same is False:
            verdict = Verdict(
                verdict.name, False, detail="the potential depends on order"
            )
        report.verdicts.append(verdict)

    return context.client.emit(report)
