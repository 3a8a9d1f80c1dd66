"""
Loads the optional solvable-qm config file so its defaults can be merged
into parsed command lines.
"""

import argparse
import os
from typing import Any, Callable, Dict, Optional, Tuple

from solvableqm.errors import UsageError
from solvableqm.helpers import rational_arg

from .helpers import _get_config, _get_config_path

FORMATS = ("table", "json", "csv", "ascii-table", "markdown")


def _boolean(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("1", "yes", "true", "on"):
        return True
    if lowered in ("0", "no", "false", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def _model(value: str) -> str:
    value = value.strip().upper()
    if value not in ("H", "L", "J", "SOLITON"):
        raise ValueError(f"unknown model {value!r}")
    return value


def _format(value: str) -> str:
    value = value.strip().lower()
    if value not in FORMATS:
        raise ValueError(f"expected one of {', '.join(FORMATS)}")
    return value


# the [DEFAULT] keys we understand, with their parsers
CONFIG_KEYS: Dict[str, Callable[[str], Any]] = {
    "model": _model,
    "g": rational_arg,
    "h": rational_arg,
    "n-max": int,
    "points": int,
    "xmin": float,
    "xmax": float,
    "jobs": int,
    "output": str,
    "format": _format,
    "tolerance-scale": float,
    "unsafe": _boolean,
    "debug": _boolean,
    "suppress-warnings": _boolean,
}


class CLIConfig:
    """
    The [DEFAULT] section of the config file.  Other sections are ignored.
    """

    def __init__(self, path: Optional[str] = None, skip_config=False):
        if path is not None and not skip_config and not os.path.isfile(path):
            raise UsageError(f"Config file {path} does not exist")
        self.path = None if skip_config else _get_config_path(path)
        self.config = _get_config(path, load=not skip_config)
        self.validate()

    def validate(self):
        """
        Rejects keys that no flag corresponds to.
        """
        unknown = sorted(set(self.config.defaults()) - set(CONFIG_KEYS))
        if unknown:
            raise UsageError(
                f"Unknown config key(s) in {self.path}: {', '.join(unknown)}"
            )

    def get_value(self, key: str) -> Any:
        """
        Returns the parsed value of a [DEFAULT] key, or None if it is unset.

        :param key: The key to look up, in its dashed flag form.
        :type key: str
        """
        if key not in CONFIG_KEYS:
            raise UsageError(f"Unknown config key {key!r}")
        if not self.config.has_option("DEFAULT", key):
            return None

        raw = self.config.get("DEFAULT", key)
        try:
            return CONFIG_KEYS[key](raw)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(
                f"Bad value for {key} in {self.path}: {exc}"
            ) from exc

    def update(
        self, namespace: argparse.Namespace
    ) -> Tuple[argparse.Namespace, Dict[str, Any]]:
        """
        Fills the attributes of a parsed Namespace that the command line
        left unset.  Flags always win.  Returns the new Namespace and the
        values taken from the file.
        """
        ns_dict = vars(namespace).copy()
        used = {}

        for key in CONFIG_KEYS:
            attr = key.replace("-", "_")
            if attr not in ns_dict or ns_dict[attr] is not None:
                continue

            value = self.get_value(key)
            if value is None:
                continue

            ns_dict[attr] = value
            used[key] = value

        return argparse.Namespace(**ns_dict), used
