#!/usr/local/bin/python3
"""
Unit tests for solvableqm.configuration
"""
import argparse
from unittest.mock import mock_open, patch

import pytest
from sympy import Rational

from solvableqm import configuration
from solvableqm.configuration.helpers import _get_config_path
from solvableqm.errors import UsageError


class TestConfiguration:
    """
    Unit tests for solvableqm.configuration
    """

    mock_config_file = """[DEFAULT]
model = j
g = 3/2
points = 257
format = JSON
unsafe = yes

[unused]
model = nonsense"""

    def _build_test_config(self, config=mock_config_file):
        """
        Helper to generate config with mock data
        """
        conf = None
        with patch(
            "solvableqm.configuration.helpers.configparser.open",
            mock_open(read_data=config),
        ):
            conf = configuration.CLIConfig()
        return conf

    def test_get_value(self):
        conf = self._build_test_config()

        assert conf.get_value("model") == "J"
        assert conf.get_value("g") == Rational(3, 2)
        assert conf.get_value("points") == 257
        assert conf.get_value("format") == "json"
        assert conf.get_value("unsafe") is True
        assert conf.get_value("h") is None

    def test_unknown_key(self):
        with pytest.raises(UsageError):
            self._build_test_config("[DEFAULT]\ntoken = abc\n")

        conf = self._build_test_config()
        with pytest.raises(UsageError):
            conf.get_value("token")

    def test_bad_value(self):
        conf = self._build_test_config("[DEFAULT]\npoints = many\n")
        with pytest.raises(UsageError):
            conf.get_value("points")

        conf = self._build_test_config("[DEFAULT]\nmodel = Morse\n")
        with pytest.raises(UsageError):
            conf.get_value("model")

        conf = self._build_test_config("[DEFAULT]\ndebug = perhaps\n")
        with pytest.raises(UsageError):
            conf.get_value("debug")

    def test_update(self):
        """
        Test CLIConfig.update() fills only unset attributes
        """
        conf = self._build_test_config()
        ns = argparse.Namespace(model=None, g=None, points=64, n_max=None)

        result, used = conf.update(ns)

        assert result.model == "J"
        assert result.g == Rational(3, 2)
        assert result.points == 64
        assert result.n_max is None
        assert used == {"model": "J", "g": Rational(3, 2)}
        assert not hasattr(result, "unsafe")

    def test_missing_explicit_path(self, tmp_path):
        with pytest.raises(UsageError):
            configuration.CLIConfig(str(tmp_path / "missing"))

    def test_skip_config(self):
        conf = configuration.CLIConfig(skip_config=True)
        assert conf.path is None
        assert conf.get_value("model") is None

    def test_config_path(self, mocker):
        assert _get_config_path("/tmp/custom") == "/tmp/custom"

        mocker.patch(
            "solvableqm.configuration.helpers.os.path.exists",
            return_value=False,
        )
        assert _get_config_path().endswith("/solvable-qm")

        mocker.patch(
            "solvableqm.configuration.helpers.os.path.exists",
            return_value=True,
        )
        assert _get_config_path().endswith("/.solvable-qm")
