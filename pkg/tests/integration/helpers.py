import subprocess
from typing import List

SUCCESS_STATUS_CODE = 0
FAILED_STATUS_CODE = 1
USAGE_STATUS_CODE = 2
BASE_CMD = ["solvable-qm"]
COMMAND_JSON_OUTPUT = ["--skip-config", "--suppress-warnings", "--json"]


def exec_test_command(args: List[str]):
    process = subprocess.run(args, stdout=subprocess.PIPE)
    assert process.returncode == SUCCESS_STATUS_CODE
    return process


def exec_failing_test_command(
    args: List[str], expected_code: int = FAILED_STATUS_CODE
):
    process = subprocess.run(
        args, stdout=subprocess.PIPE, stderr=subprocess.PIPE
    )
    assert process.returncode == expected_code
    return process
