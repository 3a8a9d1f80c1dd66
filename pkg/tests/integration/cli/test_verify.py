import json

import pytest

from tests.integration.helpers import (
    BASE_CMD,
    COMMAND_JSON_OUTPUT,
    USAGE_STATUS_CODE,
    exec_failing_test_command,
    exec_test_command,
)


@pytest.mark.smoke
def test_closure_suite_passes():
    process = exec_test_command(
        BASE_CMD + COMMAND_JSON_OUTPUT + ["verify", "closure", "--model", "J"]
    )
    report = json.loads(process.stdout.decode())

    assert report["command"] == "verify"
    assert report["results"]["failed"] == 0
    assert all(v["pass"] for v in report["verdicts"])


def test_spectrum_of_deformed_oscillator():
    process = exec_test_command(
        BASE_CMD
        + COMMAND_JSON_OUTPUT
        + ["spectrum", "--model", "H", "--delete", "1,2", "--n-max", "4"]
    )
    report = json.loads(process.stdout.decode())

    levels = [row["level"] for row in report["results"]["spectrum"]]
    assert levels == [0, 3, 4]


def test_missing_model_is_a_usage_error():
    process = exec_failing_test_command(
        BASE_CMD + COMMAND_JSON_OUTPUT + ["spectrum"],
        expected_code=USAGE_STATUS_CODE,
    )

    assert "--model is required" in process.stderr.decode()


def test_singular_deletion_is_refused():
    process = exec_failing_test_command(
        BASE_CMD
        + COMMAND_JSON_OUTPUT
        + ["deform", "--model", "H", "--delete", "1"],
        expected_code=USAGE_STATUS_CODE,
    )

    assert process.stderr.decode()
