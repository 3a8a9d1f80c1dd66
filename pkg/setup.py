#!/usr/bin/env python3
import pathlib

from setuptools import find_packages, setup

here = pathlib.Path().absolute()


# get the long description from the README.md
with open(here / "README.md", encoding="utf-8") as f:
    long_description = f.read()


def get_version():
    """
    Reads the package version from solvableqm/version.py
    """
    namespace = {}
    with open(here / "solvableqm" / "version.py", encoding="utf-8") as f:
        exec(f.read(), namespace)  # pylint: disable=exec-used
    return namespace["__version__"]


with open("requirements.txt") as f:
    requirements = f.read().splitlines()

setup(
    name="solvable-qm",
    version=get_version(),
    description="Exact symbolic-numeric engine for solvable quantum mechanics",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["solvableqm*"]),
    package_data={"solvableqm": ["data/*.yaml"]},
    license="BSD 3-Clause License",
    install_requires=requirements,
    entry_points={
        "console_scripts": [
            "solvable-qm = solvableqm:main",
            "sqm = solvableqm:main",
        ]
    },
    python_requires=">=3.8",
    include_package_data=True,
)
