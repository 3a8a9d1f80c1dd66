"""
Holds the state of one solvable-qm invocation: output settings, config
defaults and the diagnostic stream.
"""

import argparse
import sys
from typing import Optional

from rich.console import Console

from .configuration import CLIConfig
from .errors import UsageError
from .output import OutputHandler, OutputMode, ReportDocument

MODES = {
    "table": OutputMode.table,
    "json": OutputMode.json,
    "csv": OutputMode.csv,
    "ascii-table": OutputMode.ascii_table,
    "markdown": OutputMode.markdown,
}


class CLI:  # pylint: disable=too-many-instance-attributes
    """
    Responsible for routing reports to the selected output and applying
    config file defaults to parsed command lines
    """

    def __init__(
        self, version, config_path: Optional[str] = None, skip_config=False
    ):
        self.version = version
        self.debug_enabled = False
        self.suppress_warnings = False
        self.output_path: Optional[str] = None

        self.output_handler = OutputHandler()
        self.config = CLIConfig(config_path, skip_config=skip_config)

        # diagnostics never mix with report output
        self.console = Console(stderr=True, highlight=False)

    def configure(self, parsed: argparse.Namespace):
        """
        Applies the global flags, filling unset ones from the config file.
        """
        parsed = self.apply_defaults(parsed)

        self.debug_enabled = bool(parsed.debug)
        self.suppress_warnings = bool(parsed.suppress_warnings)
        self.output_path = parsed.output

        if parsed.format is not None:
            self.output_handler.mode = MODES[parsed.format]
            self.output_handler.mode_explicit = True
        if parsed.pretty:
            self.output_handler.mode = OutputMode.json
            self.output_handler.mode_explicit = True
            self.output_handler.pretty_json = True
        if parsed.no_headers:
            self.output_handler.headers = False
        self.output_handler.column_width = parsed.column_width

        if self.config.path is not None:
            self.debug(f"Config file: {self.config.path}")

    def apply_defaults(
        self, parsed: argparse.Namespace
    ) -> argparse.Namespace:
        """
        Fills flags the command line left unset from the [DEFAULT] section.
        """
        parsed, used = self.config.update(parsed)
        for key, value in used.items():
            self.debug(f"Using {key}={value} from the config file")
        return parsed

    def default_mode(self, mode: OutputMode):
        """
        Selects a command's preferred output mode unless one was chosen.
        """
        if not self.output_handler.mode_explicit:
            self.output_handler.mode = mode

    def debug(self, msg: str):
        if self.debug_enabled:
            self.console.print(f"DEBUG: {msg}", markup=False)

    def warn(self, msg: str):
        if not self.suppress_warnings:
            self.console.print(f"WARNING: {msg}", markup=False)

    def emit(self, report: ReportDocument) -> int:
        """
        Prints a report to --output or stdout and returns its exit code.
        """
        if self.output_path is None:
            self.output_handler.print_report(report, sys.stdout)
            return report.exit_code

        try:
            with open(self.output_path, "w", encoding="utf-8") as f:
                self.output_handler.print_report(report, f)
        except OSError as exc:
            raise UsageError(
                f"Cannot write {self.output_path}: {exc.strerror}"
            ) from exc

        self.debug(f"Wrote {report.command} report to {self.output_path}")
        return report.exit_code
