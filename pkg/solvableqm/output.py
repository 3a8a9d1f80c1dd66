"""
Handles formatting the output of commands used in solvable-qm
"""

import csv
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from sys import stdout
from typing import IO, Any, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from rich import box
from rich import print as rprint
from rich.table import Column, Table
from sympy import Poly, Rational
from sympy.logic.boolalg import BooleanAtom

from solvableqm.exact import RatFunc, coeffs_ascending
from solvableqm.helpers import coefficient_strings, rational_str
from solvableqm.version import __version__

FLOAT_FORMAT = "%.17g"


class OutputMode(Enum):
    """
    Enum for output modes
    """

    table = 1
    csv = 2
    json = 3
    markdown = 4
    ascii_table = 5


class Section(NamedTuple):
    """
    One table of results: a header and rows of values in column order.
    """

    title: str
    columns: Sequence[str]
    rows: Sequence[Sequence[Any]]

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def format_float(value: float) -> str:
    """
    Fixed float formatting; every double round trips through it.
    """
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return FLOAT_FORMAT % value


def to_jsonable(value: Any) -> Any:
    """
    Converts exact and numeric results into JSON values: rationals become
    "p/q" strings, polynomials ascending coefficient arrays of them, and
    non-finite floats strings.
    """
    # pylint: disable=too-many-return-statements
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (np.bool_, BooleanAtom)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Rational):
        return rational_str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else format_float(value)
    if isinstance(value, complex):
        return {"re": to_jsonable(value.real), "im": to_jsonable(value.imag)}
    if isinstance(value, Poly):
        return coefficient_strings(coeffs_ascending(value))
    if isinstance(value, RatFunc):
        return {"num": to_jsonable(value.num), "den": to_jsonable(value.den)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Section):
        return [
            {k: to_jsonable(v) for k, v in record.items()}
            for record in value.records()
        ]
    if hasattr(value, "as_dict"):
        return to_jsonable(value.as_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in value]
    return str(value)


def display_value(value: Any) -> str:
    """
    The text of one table or CSV cell.
    """
    if isinstance(value, (bool, np.bool_, BooleanAtom)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, Rational):
        return rational_str(value)
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    if isinstance(value, Poly):
        return " ".join(coefficient_strings(coeffs_ascending(value)))
    if isinstance(value, (list, tuple)):
        return " ".join(display_value(v) for v in value)
    if value is None:
        return ""
    return str(value)


def dump_json(value: Any, indent: Optional[int] = None, level: int = 0) -> str:
    """
    json.dumps with sorted keys and FLOAT_FORMAT floats, for values already
    passed through to_jsonable.
    """
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Out of range float in report: {value}")
        return FLOAT_FORMAT % value
    if isinstance(value, dict):
        parts = [
            f"{json.dumps(str(k))}: {dump_json(v, indent, level + 1)}"
            for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))
        ]
        return _wrap("{", parts, "}", indent, level)
    if isinstance(value, (list, tuple)):
        parts = [dump_json(v, indent, level + 1) for v in value]
        return _wrap("[", parts, "]", indent, level)
    return json.dumps(value)


def _wrap(opening, parts, closing, indent, level) -> str:
    if not parts:
        return opening + closing
    if indent is None:
        return opening + ", ".join(parts) + closing
    inner = "\n" + " " * (indent * (level + 1))
    outer = "\n" + " " * (indent * level)
    return opening + inner + ("," + inner).join(parts) + outer + closing


@dataclass
class ReportDocument:
    """
    The result of one command: an echo of its inputs, its results, the
    verdicts of any checks it ran and the package version.
    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    verdicts: List[Any] = field(default_factory=list)
    version: str = __version__

    # the section written alone in csv mode, for plot data
    stream: Optional[str] = None

    def add_section(
        self, name: str, columns: Sequence[str], rows: Sequence[Sequence]
    ) -> Section:
        section = Section(name, list(columns), [list(r) for r in rows])
        self.results[name] = section
        return section

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def as_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs": to_jsonable(self.inputs),
            "results": to_jsonable(self.results),
            "verdicts": to_jsonable(self.verdicts),
            "version": self.version,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        """
        Deterministic serialization: sorted keys and fixed float format.
        """
        return dump_json(self.as_dict(), indent=indent)

    def sections(self) -> List[Section]:
        """
        The result tables in insertion order; scalar results are gathered
        into one name/value table, and verdicts form the last table.
        """
        tables = []
        scalars = []
        for name, value in self.results.items():
            if isinstance(value, Section):
                tables.append(value)
            else:
                scalars.append([name, value])

        if scalars:
            tables.insert(0, Section("results", ["name", "value"], scalars))

        if self.verdicts:
            tables.append(
                Section(
                    "verdicts",
                    ["name", "pass", "residual", "detail"],
                    [
                        [v.name, v.passed, v.residual, v.detail]
                        for v in self.verdicts
                    ],
                )
            )
        return tables


class OutputHandler:  # pylint: disable=too-few-public-methods
    """
    Handles formatting the output of commands used in solvable-qm
    """

    def __init__(
        self,
        mode=OutputMode.table,
        headers=True,
        column_width=None,
        pretty_json=False,
    ):
        self.mode = mode
        self.headers = headers
        self.column_width = column_width
        self.pretty_json = pretty_json

        # whether a mode flag was given, as opposed to the default
        self.mode_explicit = False

    def print(
        self,
        data: Sequence[Sequence[Any]],
        columns: Sequence[str],
        title: Optional[str] = None,
        to: IO[str] = stdout,
    ):
        """
        :param data: The rows to display
        :type data: list[list]
        :param columns: The column headers
        :type columns: list[str]
        :param title: The title to display on a table
        :type title: Optional[str]
        :param to: Where to print output to
        :type to: stdout, stderr or file
        """
        if len(columns) < 1:
            raise ValueError("Expected a non-zero number of columns.")

        # We need to use lambdas here since we don't want unused function params
        output_mode_to_func = {
            OutputMode.table: lambda: self._table_output(
                columns, data, title, to
            ),
            OutputMode.ascii_table: lambda: self._table_output(
                columns, data, title, to, box_style=box.ASCII
            ),
            OutputMode.markdown: lambda: self._table_output(
                columns, data, title, to, box_style=box.MARKDOWN
            ),
            OutputMode.csv: lambda: self._csv_output(columns, data, to),
            OutputMode.json: lambda: self._json_output(columns, data, to),
        }

        if self.mode not in output_mode_to_func:
            raise RuntimeError(f"Unknown output mode: {self.mode}")

        output_mode_to_func[self.mode]()

    def print_report(self, report: ReportDocument, to: IO[str] = stdout):
        """
        Prints a whole report: the JSON document in json mode, otherwise
        one table per section.
        """
        if self.mode == OutputMode.json:
            print(
                report.to_json(indent=2 if self.pretty_json else None),
                file=to,
            )
            return

        if self.mode == OutputMode.csv and report.stream is not None:
            section = report.results[report.stream]
            self._csv_output(section.columns, section.rows, to)
            return

        sections = report.sections()
        for i, section in enumerate(sections):
            self.print(section.rows, section.columns, section.title, to)

            # Print gaps between tables for csv outputs
            if self.mode == OutputMode.csv and i < len(sections) - 1:
                print(file=to)

    def _table_output(
        self, header, data, title, to, box_style=box.SQUARE
    ):  # pylint: disable=too-many-arguments
        """
        Pretty-prints data in a table
        """
        header_columns = [
            Column(v, overflow="fold", max_width=self.column_width)
            for v in header
        ]

        tab = Table(
            *header_columns,
            header_style="",
            box=box_style,
            show_header=self.headers,
            title_justify="left",
        )
        for row in data:
            tab.add_row(*[display_value(v) for v in row])

        if title is not None and self.headers:
            tab.title = title
            tab.min_width = self.column_width or len(title)

        rprint(tab, file=to)

    def _csv_output(self, header, data, to):
        """
        Writes RFC 4180 quoted rows with LF line endings and a header row.
        """
        writer = csv.writer(to, lineterminator="\n")
        writer.writerow(header)
        for row in data:
            writer.writerow([display_value(v) for v in row])

    def _json_output(self, header, data, to):
        """
        Prints rows as a JSON list of objects
        """
        content = [
            {k: to_jsonable(v) for k, v in zip(header, row)} for row in data
        ]
        print(
            dump_json(content, indent=2 if self.pretty_json else None),
            file=to,
        )
