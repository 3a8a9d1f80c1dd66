import io
import json
import math

import numpy as np
import pytest
from sympy import QQ, Poly, Rational, S

from solvableqm.exact import ETA
from solvableqm.output import (
    OutputMode,
    ReportDocument,
    Section,
    display_value,
    dump_json,
    format_float,
    to_jsonable,
)
from solvableqm.suites import Verdict


def _report():
    report = ReportDocument("spectrum", {"model": "H", "n-max": 1})
    report.results["system"] = "H"
    report.add_section(
        "spectrum", ["level", "energy", "value"], [[0, Rational(0), 0.0]]
    )
    report.verdicts.append(Verdict("eigen(0)", True, Rational(0)))
    return report


class TestValues:
    """
    Unit tests for the value conversions in solvableqm.output
    """

    def test_format_float(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert format_float(2) == "2"
        assert format_float(math.nan) == "nan"
        assert format_float(-math.inf) == "-inf"

    def test_to_jsonable(self):
        assert to_jsonable(Rational(-1, 2)) == "-1/2"
        assert to_jsonable(np.bool_(True)) is True
        assert to_jsonable(S.true) is True
        assert to_jsonable(Rational(1) < 0) is False
        assert to_jsonable(np.int64(3)) == 3
        assert to_jsonable(math.inf) == "inf"
        assert to_jsonable(1 - 2j) == {"re": 1.0, "im": -2.0}
        assert to_jsonable(OutputMode.csv) == 2

        p = Poly(4 * ETA**2 - 2, ETA, domain=QQ)
        assert to_jsonable(p) == ["-2", "0", "4"]
        assert to_jsonable({1: [Rational(1, 3)]}) == {"1": ["1/3"]}

    def test_section_records(self):
        section = Section("t", ["n", "E"], [[0, Rational(1, 2)]])
        assert to_jsonable(section) == [{"n": 0, "E": "1/2"}]

    def test_display_value(self):
        assert display_value(True) == "true"
        assert display_value(S.false) == "false"
        assert display_value(Rational(3, 4)) == "3/4"
        assert display_value(0.5) == "0.5"
        assert display_value(None) == ""
        assert display_value([1, Rational(1, 2)]) == "1 1/2"
        p = Poly(ETA + 1, ETA, domain=QQ)
        assert display_value(p) == "1 1"


class TestReportDocument:
    """
    Unit tests for solvableqm.output.ReportDocument
    """

    def test_to_json(self):
        text = _report().to_json()
        parsed = json.loads(text)

        assert list(parsed) == [
            "command",
            "inputs",
            "results",
            "verdicts",
            "version",
        ]
        assert parsed["results"]["spectrum"] == [
            {"energy": "0", "level": 0, "value": 0.0}
        ]
        assert parsed["verdicts"][0]["pass"] is True

    def test_float_format(self):
        report = ReportDocument("x")
        report.results["value"] = 0.1
        assert '"value": 0.10000000000000001' in report.to_json()

    def test_pretty_json(self):
        report = _report()
        report.results["value"] = 0.1
        text = report.to_json(indent=2)
        assert '\n  "command": "spectrum",' in text
        assert "0.10000000000000001" in text
        assert json.loads(text) == json.loads(report.to_json())

    def test_dump_json(self):
        assert dump_json({"b": [], "a": {}}) == '{"a": {}, "b": []}'
        pretty = dump_json([1.5, None, "x"], indent=1)
        assert pretty == '[\n 1.5,\n null,\n "x"\n]'
        with pytest.raises(ValueError):
            dump_json(math.inf)

    def test_exit_code(self):
        report = _report()
        assert report.exit_code == 0
        report.verdicts.append(Verdict("closure", False, 1))
        assert not report.passed
        assert report.exit_code == 1

    def test_sections(self):
        titles = [s.title for s in _report().sections()]
        assert titles == ["results", "spectrum", "verdicts"]


class TestOutputHandler:
    """
    Unit tests for solvableqm.output.OutputHandler
    """

    def test_json_output(self, mock_cli):
        output = io.StringIO()
        headers = ["foo", "bar"]
        data = [[Rational(1, 2), 0.25]]

        mock_cli.output_handler._json_output(headers, data, output)

        assert '[{"bar": 0.25, "foo": "1/2"}]' in output.getvalue()

    def test_csv_output(self, mock_cli):
        output = io.StringIO()
        mock_cli.output_handler._csv_output(
            ["n", "note"], [[1, "a,b"], [2, True]], output
        )

        assert output.getvalue() == 'n,note\n1,"a,b"\n2,true\n'

    def test_table_output(self, mock_cli):
        output = io.StringIO()
        mock_cli.output_handler._table_output(
            ["level", "energy"], [[0, Rational(1, 2)]], "spectrum", output
        )

        text = output.getvalue()
        assert "spectrum" in text
        assert "1/2" in text

    def test_no_columns(self, mock_cli):
        with pytest.raises(ValueError):
            mock_cli.output_handler.print([], [])

    def test_print_report_json(self, mock_cli):
        output = io.StringIO()
        mock_cli.output_handler.mode = OutputMode.json
        mock_cli.output_handler.print_report(_report(), output)

        assert json.loads(output.getvalue())["command"] == "spectrum"

    def test_print_report_csv(self, mock_cli):
        output = io.StringIO()
        mock_cli.output_handler.mode = OutputMode.csv
        mock_cli.output_handler.print_report(_report(), output)

        blocks = output.getvalue().split("\n\n")
        assert len(blocks) == 3
        assert blocks[1] == "level,energy,value\n0,0,0"

    def test_print_report_stream(self, mock_cli):
        output = io.StringIO()
        report = _report()
        report.stream = "spectrum"
        mock_cli.output_handler.mode = OutputMode.csv
        mock_cli.output_handler.print_report(report, output)

        assert output.getvalue() == "level,energy,value\n0,0,0\n"
