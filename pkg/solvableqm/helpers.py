"""
Various helper functions shared across multiple CLI components.
"""

import argparse
from argparse import ArgumentParser
from typing import List, Optional, Sequence, Tuple

from sympy import Rational, SympifyError

from .errors import UsageError


def parse_rational(text) -> Rational:
    """
    Parses "p/q", "p" or a terminating decimal into an exact Rational.
    """
    if isinstance(text, Rational):
        return text
    if isinstance(text, int):
        return Rational(text)

    try:
        value = Rational(str(text).strip())
    except (TypeError, ValueError, SympifyError) as exc:
        raise UsageError(f"Not a rational number: {text!r}") from exc

    return value


def rational_str(value) -> str:
    """
    Serializes a Rational as "p/q", or "p" when the denominator is 1.
    """
    value = Rational(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


def floor_prime(value) -> int:
    """
    Returns [a]', the greatest integer strictly less than a.
    """
    value = Rational(value)
    # -((-p) // q) is ceil(p/q)
    return -((-value.p) // value.q) - 1


def rational_arg(text: str) -> Rational:
    """
    argparse type for rational-valued flags
    """
    try:
        return parse_rational(text)
    except UsageError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def rational_list_arg(text: str) -> List[Rational]:
    """
    argparse type for comma separated lists of rationals
    """
    return [rational_arg(v) for v in text.split(",") if v.strip()]


def int_list_arg(text: str) -> List[int]:
    """
    argparse type for comma separated lists of non-negative integers
    """
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"Not a list of integers: {text!r}"
        ) from exc

    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"Negative index in {text!r}")

    return values


def parse_index_set(text: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Parses a multi-index specification such as "1I,2I,1II" into the sorted
    type I and type II degree tuples.  A bare integer counts as type I.
    """
    type_one, type_two = [], []

    for raw in text.split(","):
        token = raw.strip().upper()
        if not token:
            continue

        target = type_one
        if token.endswith("II"):
            target, token = type_two, token[:-2]
        elif token.endswith("I"):
            token = token[:-1]

        try:
            target.append(int(token))
        except ValueError as exc:
            raise UsageError(f"Bad multi-index entry {raw!r}") from exc

    for group in (type_one, type_two):
        if len(set(group)) != len(group):
            raise UsageError(f"Repeated index in {text!r}")

    return tuple(sorted(type_one)), tuple(sorted(type_two))


def register_model_args_shared(parser: ArgumentParser):
    """
    Add the model selection arguments shared by most subcommands.
    """
    parser.add_argument(
        "--model",
        metavar="MODEL",
        type=str.upper,
        choices=["H", "L", "J", "SOLITON"],
        help="The base system: H, L, J or Soliton.",
    )
    parser.add_argument(
        "--g",
        metavar="G",
        type=rational_arg,
        help="The parameter g (L and J), as p/q.",
    )
    parser.add_argument(
        "--h",
        metavar="H",
        type=rational_arg,
        help="The parameter h (J and Soliton), as p/q.",
    )
    parser.add_argument(
        "--unsafe",
        action="store_true",
        default=None,
        help="Build deliberately singular or out-of-bound constructions.",
    )

    return parser


def register_grid_args_shared(parser: ArgumentParser):
    """
    Add the sampling grid arguments shared by sample-producing subcommands.
    """
    parser.add_argument(
        "--points",
        metavar="POINTS",
        type=int,
        help="Number of grid points (at least 16).",
    )
    parser.add_argument(
        "--xmin",
        metavar="XMIN",
        type=float,
        help="Left end of the sampled x range.",
    )
    parser.add_argument(
        "--xmax",
        metavar="XMAX",
        type=float,
        help="Right end of the sampled x range.",
    )

    return parser


def first_not_none(*values: Optional[object]):
    """
    Returns the first value that is not None.
    """
    for v in values:
        if v is not None:
            return v
    return None


def coefficient_strings(coeffs: Sequence) -> List[str]:
    """
    Serializes a coefficient sequence as a list of "p/q" strings.
    """
    return [rational_str(c) for c in coeffs]
