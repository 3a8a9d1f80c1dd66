import argparse
import json
import sys

import pytest

from solvableqm import main
from solvableqm.arg_helpers import register_args
from solvableqm.errors import UsageError
from solvableqm.output import OutputMode, ReportDocument
from solvableqm.suites import Verdict


def _parse(*args):
    parser = argparse.ArgumentParser(add_help=False)
    parsed, _ = register_args(parser).parse_known_args(list(args))
    return parsed


class TestCLI:
    """
    Unit tests for solvableqm.cli
    """

    def test_configure_format(self, mock_cli):
        mock_cli.configure(_parse("spectrum", "--json", "--debug"))

        assert mock_cli.output_handler.mode == OutputMode.json
        assert mock_cli.output_handler.mode_explicit
        assert mock_cli.debug_enabled

    def test_configure_pretty(self, mock_cli):
        mock_cli.configure(_parse("spectrum", "--pretty", "--no-headers"))

        assert mock_cli.output_handler.pretty_json
        assert mock_cli.output_handler.mode == OutputMode.json
        assert not mock_cli.output_handler.headers

    def test_configure_from_file(self, mock_cli):
        # MOCK_CONFIG sets suppress-warnings
        mock_cli.suppress_warnings = False
        mock_cli.configure(_parse("spectrum"))

        assert mock_cli.suppress_warnings
        assert mock_cli.output_handler.mode == OutputMode.table
        assert not mock_cli.output_handler.mode_explicit

    def test_apply_defaults(self, mock_cli):
        parsed = mock_cli.apply_defaults(argparse.Namespace(points=None))
        assert parsed.points == 257

        parsed = mock_cli.apply_defaults(argparse.Namespace(points=33))
        assert parsed.points == 33

    def test_default_mode(self, mock_cli):
        mock_cli.default_mode(OutputMode.csv)
        assert mock_cli.output_handler.mode == OutputMode.csv

        mock_cli.configure(_parse("sample", "--markdown"))
        mock_cli.default_mode(OutputMode.csv)
        assert mock_cli.output_handler.mode == OutputMode.markdown

    def test_warn(self, mock_cli, capsys):
        mock_cli.warn("hidden")
        mock_cli.suppress_warnings = False
        mock_cli.warn("the potential has poles")

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "WARNING: the potential has poles" in captured.err
        assert "hidden" not in captured.err

    def test_debug(self, mock_cli, capsys):
        mock_cli.debug("quiet")
        mock_cli.debug_enabled = True
        mock_cli.debug("loud")

        err = capsys.readouterr().err
        assert "DEBUG: loud" in err
        assert "quiet" not in err

    def test_emit_to_file(self, json_cli, tmp_path):
        json_cli.output_path = str(tmp_path / "report.json")
        report = ReportDocument("verify", verdicts=[Verdict("x", False)])

        assert json_cli.emit(report) == 1
        with open(json_cli.output_path, encoding="utf-8") as f:
            assert json.load(f)["command"] == "verify"

    def test_emit_unwritable(self, json_cli, tmp_path):
        json_cli.output_path = str(tmp_path / "missing" / "report.json")
        with pytest.raises(UsageError):
            json_cli.emit(ReportDocument("verify"))


class TestMain:
    """
    Unit tests for solvableqm.main
    """

    def test_version(self, mocker, capsys):
        mocker.patch.object(sys, "argv", ["solvable-qm", "--version"])
        with pytest.raises(SystemExit) as err:
            main()

        assert err.value.code == 0
        assert capsys.readouterr().out.startswith("solvable-qm ")

    def test_usage_error_exit_code(self, mocker, capsys):
        mocker.patch.object(
            sys, "argv", ["solvable-qm", "--skip-config", "spectrum"]
        )
        with pytest.raises(SystemExit) as err:
            main()

        assert err.value.code == 2
        assert "Error: --model is required" in capsys.readouterr().err

    def test_command_exit_code(self, mocker, capsys):
        mocker.patch.object(
            sys,
            "argv",
            [
                "solvable-qm",
                "--skip-config",
                "--json",
                "spectrum",
                "--model",
                "H",
            ],
        )
        with pytest.raises(SystemExit) as err:
            main()

        assert err.value.code == 0
        assert json.loads(capsys.readouterr().out)["command"] == "spectrum"
