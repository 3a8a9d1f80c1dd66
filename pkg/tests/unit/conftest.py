import configparser
import json

import pytest
from yaml import safe_load

from solvableqm import commands
from solvableqm.cli import CLI
from solvableqm.output import OutputMode

MOCK_CONFIG = """
[DEFAULT]
points = 257
suppress-warnings = yes
"""

LOADED_FILES = {}


def _get_parsed_yaml(filename):
    """
    Returns a python dict that is a parsed yaml file from the tests/fixtures
    directory.

    :param filename: The filename to load.  Must exist in tests/fixtures and
                     include extension.
    :type filename: str
    """
    if filename not in LOADED_FILES:
        with open("tests/fixtures/" + filename) as f:
            raw = f.read()
        parsed = safe_load(raw)

        LOADED_FILES[filename] = parsed

    return LOADED_FILES[filename]


@pytest.fixture
def mock_cli(version="DEVELOPMENT"):
    result = CLI(version, skip_config=True)
    result.suppress_warnings = True

    # Let's override the config with a custom one
    conf = configparser.ConfigParser(interpolation=None)
    conf.read_string(MOCK_CONFIG)

    result.config.config = conf

    return result


@pytest.fixture
def json_cli(mock_cli):
    """
    A CLI that writes every report as one JSON document.
    """
    mock_cli.output_handler.mode = OutputMode.json
    mock_cli.output_handler.mode_explicit = True
    return mock_cli


@pytest.fixture
def run_command(json_cli, capsys):
    """
    Runs a command under json_cli and returns (exit code, parsed report).
    """

    def run(name, *args):
        code = commands.invoke(
            name, list(args), commands.CommandContext(json_cli)
        )
        return code, json.loads(capsys.readouterr().out)

    return run
