import textwrap

import pytest

from tests.integration.helpers import BASE_CMD, exec_test_command


@pytest.mark.smoke
def test_help_page_lists_commands_and_suites():
    process = exec_test_command(BASE_CMD + ["--help"])
    output = process.stdout.decode()

    assert "Commands:" in output
    for name in ("spectrum", "deform", "scatter", "verify"):
        assert name in output
    assert "closure" in output


@pytest.mark.smoke
def test_help_page_for_command():
    process = exec_test_command(BASE_CMD + ["verify", "--help"])
    output = process.stdout.decode()
    wrapped_output = textwrap.fill(output, width=150).replace("\n", "")

    assert "Run a verification suite" in wrapped_output
    assert "--tolerance-scale" in wrapped_output
    assert "--model" in wrapped_output
