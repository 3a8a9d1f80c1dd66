"""
General helper functions for configuration
"""

import configparser
import os
from typing import Optional

LEGACY_CONFIG_NAME = ".solvable-qm"
LEGACY_CONFIG_DIR = os.path.expanduser("~")

CONFIG_NAME = "solvable-qm"
CONFIG_DIR = os.environ.get(
    "XDG_CONFIG_HOME", f"{os.path.expanduser('~')}/.config"
)


def _get_config_path(override: Optional[str] = None) -> str:
    """
    Returns the path to the config file.  An explicit --config path wins,
    then a legacy file in the home directory, then the XDG location.
    """
    if override is not None:
        return override

    path = f"{LEGACY_CONFIG_DIR}/{LEGACY_CONFIG_NAME}"
    if os.path.exists(path):
        return path

    return f"{CONFIG_DIR}/{CONFIG_NAME}"


def _get_config(path: Optional[str] = None, load=True):
    """
    Returns a new ConfigParser object that represents the CLI's configuration.
    If load is false, we won't load the config from disk.

    :param path: An explicit config file path, or None for the default.
    :type path: Optional[str]
    :param load: If True, load the config from the resolved path.
                 Otherwise, don't (and just return an empty ConfigParser)
    :type load: bool
    """
    # values may hold a literal %
    conf = configparser.ConfigParser(interpolation=None)

    if load:
        conf.read(_get_config_path(path))

    return conf
