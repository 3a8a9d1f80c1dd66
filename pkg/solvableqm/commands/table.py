"""
The table command emits exact coefficient tables.

Invoke as follows::

   solvable-qm table WHAT --model MODEL [--g G] [--h H] [--n-max N]

   WHAT - one of:
      spectrum     E(n) for n <= N
      eigen        the polynomial parts P_n(eta)
      recurrence   A_n, B_n, C_n of the classical family
      norms        the closed form norms h_n
      virtual      the virtual state polynomials xi_d of --kind (L, J)
      xi           Xi_D of the index set --D (L, J)
      multi        the multi-indexed polynomials P_D,n (L, J)
      exceptional  the X_l polynomials of --kind and --ell (L, J)

Polynomials are ascending coefficient arrays of "p/q" strings.
"""

from solvableqm.commands import (
    command_parser,
    echo_inputs,
    levels_of,
    model_from_args,
    n_max_from_args,
    parse_args,
)
from solvableqm.errors import UnsupportedModelError, UsageError
from solvableqm.models import ModelId, norm_closed_form
from solvableqm.multi_indexed import (
    TYPE_ONE,
    TYPE_TWO,
    IndexSet,
    exceptional_params,
    exceptional_poly,
    exceptional_xi,
    make_multi_indexed,
    virtual_poly,
)
from solvableqm.numeric import norm_value
from solvableqm.ortho_poly import recurrence_coeffs
from solvableqm.output import ReportDocument

SUMMARY = "Exact spectra, recurrence and polynomial coefficient tables"

TABLES = (
    "spectrum",
    "eigen",
    "recurrence",
    "norms",
    "virtual",
    "xi",
    "multi",
    "exceptional",
)

MULTI_INDEXED_MODELS = (ModelId.L, ModelId.J)


def _spectrum(report, model, parsed):
    report.add_section(
        "spectrum",
        ["n", "energy"],
        [[n, model.energy(n)] for n in levels_of(model, parsed.n_max)],
    )


def _eigen(report, model, parsed):
    rows = []
    for n in levels_of(model, parsed.n_max):
        p = model.eigen_poly(n)
        rows.append([n, p.degree(), p])
    report.add_section("eigen", ["n", "degree", "coefficients"], rows)


def _recurrence(report, model, parsed):
    family = model.family()
    report.results["family"] = family.kind.value
    rows = []
    for n in range(parsed.n_max + 1):
        a, b, c = recurrence_coeffs(family, n)
        rows.append([n, a, b, c])
    report.add_section("recurrence", ["n", "A", "B", "C"], rows)


def _norms(report, model, parsed):
    rows = []
    for n in levels_of(model, parsed.n_max):
        norm = norm_closed_form(model, n)
        rows.append([n, norm.rational, norm.tag.value, norm_value(norm)])
    report.add_section("norms", ["n", "rational", "factor", "value"], rows)


def _virtual(report, model, parsed):
    rows = []
    for d in range(parsed.n_max + 1):
        xi = virtual_poly(model, parsed.kind, d)
        rows.append([d, xi.degree(), xi])
    report.add_section("virtual", ["d", "degree", "coefficients"], rows)


def _multi_indexed(parsed, model, warn):
    if not parsed.D:
        raise UsageError("This table needs the index set --D")
    return make_multi_indexed(
        model, IndexSet.parse(parsed.D), bool(parsed.unsafe), warn
    )


def _xi(report, model, parsed, warn=None):
    system = _multi_indexed(parsed, model, warn)
    report.results["index-set"] = str(system.index_set)
    report.results["ell"] = system.ell
    report.results["xi"] = system.xi


def _multi(report, model, parsed, warn=None):
    system = _multi_indexed(parsed, model, warn)
    report.results["index-set"] = str(system.index_set)
    report.results["shifted-params"] = system.shifted_params.as_dict()
    rows = []
    for n in range(parsed.n_max + 1):
        p = system.poly(n)
        rows.append([n, p.degree(), p])
    report.add_section("multi", ["n", "degree", "coefficients"], rows)


def _exceptional(report, model, parsed):
    kind, ell = parsed.kind, parsed.ell
    report.results["xi"] = exceptional_xi(model, kind, ell)
    report.results["shifted-params"] = exceptional_params(
        model, kind, ell
    ).as_dict()
    rows = []
    for n in range(parsed.n_max + 1):
        p = exceptional_poly(model, kind, ell, n)
        rows.append([n, p.degree(), p])
    report.add_section("exceptional", ["n", "degree", "coefficients"], rows)


def call(args, context):
    """
    Invokes this command
    """
    parser = command_parser("table", SUMMARY)
    parser.add_argument(
        "what",
        metavar="WHAT",
        choices=TABLES,
        help=f"The table to emit: {', '.join(TABLES)}.",
    )
    parser.add_argument(
        "--n-max",
        metavar="N",
        type=int,
        help="The highest index tabulated (default 5).",
    )
    parser.add_argument(
        "--D",
        metavar="INDEX_SET",
        type=str,
        help="The index set of the xi and multi tables, e.g. 1I,2II.",
    )
    parser.add_argument(
        "--kind",
        choices=(TYPE_ONE, TYPE_TWO),
        default=TYPE_ONE,
        help="The virtual state type of the virtual and exceptional tables.",
    )
    parser.add_argument(
        "--ell",
        metavar="L",
        type=int,
        default=1,
        help="The index l of the exceptional table (default 1).",
    )
    parsed = parse_args(parser, args, context)
    parsed.n_max = n_max_from_args(parsed)

    model = model_from_args(parsed)
    if (
        parsed.what in ("virtual", "xi", "multi", "exceptional")
        and model.model_id not in MULTI_INDEXED_MODELS
    ):
        raise UnsupportedModelError(
            f"The {parsed.what} table exists for L and J, "
            f"not {model.model_id.value}"
        )

    report = ReportDocument("table", echo_inputs(parsed))
    report.results["model"] = repr(model)

    if parsed.what in ("xi", "multi"):
        build = _xi if parsed.what == "xi" else _multi
        build(report, model, parsed, context.client.warn)
    else:
        {
            "spectrum": _spectrum,
            "eigen": _eigen,
            "recurrence": _recurrence,
            "norms": _norms,
            "virtual": _virtual,
            "exceptional": _exceptional,
        }[parsed.what](report, model, parsed)

    return context.client.emit(report)
