import argparse
from argparse import ArgumentParser

import pytest
from sympy import Rational

from solvableqm.errors import UsageError
from solvableqm.helpers import (
    coefficient_strings,
    first_not_none,
    floor_prime,
    int_list_arg,
    parse_index_set,
    parse_rational,
    rational_arg,
    rational_list_arg,
    rational_str,
    register_grid_args_shared,
    register_model_args_shared,
)


class TestHelpers:
    """
    Unit tests for solvableqm.helpers
    """

    def test_parse_rational(self):
        assert parse_rational("3/2") == Rational(3, 2)
        assert parse_rational(" 4 ") == 4
        assert parse_rational("0.25") == Rational(1, 4)
        assert parse_rational(7) == 7
        with pytest.raises(UsageError):
            parse_rational("three halves")

    def test_rational_str(self):
        assert rational_str(Rational(-3, 4)) == "-3/4"
        assert rational_str(Rational(6, 3)) == "2"
        assert coefficient_strings([1, Rational(1, 2)]) == ["1", "1/2"]

    def test_floor_prime(self):
        # the greatest integer strictly below
        assert floor_prime(3) == 2
        assert floor_prime(Rational(5, 2)) == 2
        assert floor_prime(Rational(1, 2)) == 0
        assert floor_prime(0) == -1

    def test_list_args(self):
        assert rational_list_arg("1/2, 2") == [Rational(1, 2), 2]
        assert int_list_arg("1,2,") == [1, 2]
        with pytest.raises(argparse.ArgumentTypeError):
            rational_arg("x")
        with pytest.raises(argparse.ArgumentTypeError):
            int_list_arg("1,-2")
        with pytest.raises(argparse.ArgumentTypeError):
            int_list_arg("1,b")

    def test_parse_index_set(self):
        assert parse_index_set("2I,1ii,1") == ((1, 2), (1,))
        assert parse_index_set("") == ((), ())
        with pytest.raises(UsageError):
            parse_index_set("1I,1")
        with pytest.raises(UsageError):
            parse_index_set("aII")

    def test_first_not_none(self):
        assert first_not_none(None, 0, 3) == 0
        assert first_not_none(None, None) is None

    def test_register_model_args_shared(self):
        parser = ArgumentParser()
        register_model_args_shared(parser)

        args = parser.parse_args(
            ["--model", "soliton", "--h", "5/2", "--unsafe"]
        )
        assert args.model == "SOLITON"
        assert args.h == Rational(5, 2)
        assert args.g is None
        assert args.unsafe

        args = parser.parse_args([])
        assert args.unsafe is None

    def test_register_grid_args_shared(self):
        parser = ArgumentParser()
        register_grid_args_shared(parser)

        args = parser.parse_args(["--points", "64", "--xmin", "-2.5"])
        assert args.points == 64
        assert args.xmin == -2.5
        assert args.xmax is None
