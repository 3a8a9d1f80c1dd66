import numpy as np
import pytest
from sympy import QQ, Poly, Rational

from solvableqm.errors import UsageError
from solvableqm.exact import (
    ETA,
    DiffOp,
    PrefactoredFunction,
    RatFunc,
    coeffs_ascending,
    diffop_commutator,
    exponential,
    poly_from_coeffs,
    poly_wronskian,
    prefactored_wronskian,
    primitive_part,
    real_root_count,
    reflect,
)


def _p(expr):
    return Poly(expr, ETA, domain=QQ)


class TestPoly:
    """
    Unit tests for solvableqm.exact.poly
    """

    def test_coefficients_ascending(self):
        p = poly_from_coeffs([1, Rational(1, 2), 3])
        assert p == _p(3 * ETA**2 + ETA / 2 + 1)
        assert coeffs_ascending(p) == [1, Rational(1, 2), 3]
        assert coeffs_ascending(poly_from_coeffs([])) == [0]

    def test_reflect(self):
        assert reflect(_p(ETA**2 + ETA)) == _p(ETA**2 - ETA)

    def test_primitive_part(self):
        assert primitive_part(_p(ETA / 2 - 1)) == _p(ETA - 2)
        assert primitive_part(_p(-6 * ETA - 4)) == _p(3 * ETA + 2)

    def test_ratfunc_reduces(self):
        f = RatFunc(_p(ETA**2 - 1), _p(ETA - 1))
        assert f.is_polynomial
        assert f == _p(ETA + 1)

        g = RatFunc(1, _p(2 * ETA))
        assert g.den == _p(ETA)
        assert g.num == _p(Rational(1, 2))

    def test_ratfunc_arithmetic(self):
        f = RatFunc(1, _p(ETA))
        assert f + f == RatFunc(2, _p(ETA))
        assert f * _p(ETA) == 1
        assert (f**-2) == _p(ETA**2)
        assert f.diff() == RatFunc(-1, _p(ETA**2))
        assert f.eval(Rational(1, 3)) == 3

    def test_ratfunc_errors(self):
        with pytest.raises(UsageError):
            RatFunc(1, 0)
        with pytest.raises(UsageError):
            RatFunc(1, _p(ETA)).eval(0)
        with pytest.raises(UsageError):
            RatFunc(1, _p(ETA)) / RatFunc(0)
        with pytest.raises(UsageError):
            RatFunc(1, _p(ETA)).as_poly()

    def test_ratfunc_text(self):
        assert str(RatFunc(_p(ETA + 1))) == "eta + 1"
        assert str(RatFunc(1, _p(ETA))) == "(1)/(eta)"

    def test_ratfunc_immutable(self):
        f = RatFunc(1)
        with pytest.raises(AttributeError):
            f.num = _p(ETA)


class TestRoots:
    """
    Unit tests for solvableqm.exact.roots
    """

    def test_whole_line(self):
        assert real_root_count(_p(ETA**2 - 1)) == 2
        assert real_root_count(_p(ETA**2 + 1)) == 0

    def test_open_interval_excludes_ends(self):
        p = _p(ETA**2 - 1)
        assert real_root_count(p, (0, None)) == 1
        assert real_root_count(p, (-1, 1)) == 0
        assert real_root_count(p, (Rational(-3, 2), 2)) == 2

    def test_constants_and_errors(self):
        assert real_root_count(_p(5)) == 0
        with pytest.raises(UsageError):
            real_root_count(_p(0))
        with pytest.raises(UsageError):
            real_root_count(_p(ETA), (1, 0))


class TestWronskian:
    """
    Unit tests for solvableqm.exact.wronskian
    """

    def test_monomials(self):
        assert poly_wronskian([_p(1), _p(ETA), _p(ETA**2)]) == _p(2)
        assert poly_wronskian([_p(ETA), _p(ETA**2)]) == _p(ETA**2)

    def test_dependent_entries_vanish(self):
        assert poly_wronskian([_p(ETA + 1), _p(2 * ETA + 2)]).is_zero

    def test_prefactored_matches_polynomial(self):
        fs = [PrefactoredFunction(_p(ETA**k)) for k in range(3)]
        w = prefactored_wronskian(fs)
        assert w.to_ratfunc() == _p(2)

    def test_prefactored_exponentials(self):
        # W[e^eta, e^(2 eta)] = e^(3 eta)
        fs = [exponential(_p(ETA)), exponential(_p(2 * ETA))]
        w = prefactored_wronskian(fs)
        assert w.exp == _p(3 * ETA)
        assert w.ratfunc == 1

    def test_bad_variable(self):
        fs = [PrefactoredFunction(_p(ETA))]
        with pytest.raises(UsageError):
            prefactored_wronskian(fs, variable="y")
        with pytest.raises(UsageError):
            prefactored_wronskian(fs, variable="x")
        with pytest.raises(UsageError):
            prefactored_wronskian([])


class TestPrefactored:
    """
    Unit tests for solvableqm.exact.prefactored
    """

    def test_canonical_form(self):
        f = PrefactoredFunction(_p(ETA**2 * (ETA + 1)), 0, ("eta",))
        assert f.exponents == (2,)
        assert f.ratfunc == _p(ETA + 1)

    def test_diff(self):
        # d/deta eta^(1/2) = eta^(-1/2) / 2
        f = PrefactoredFunction(1, 0, ("eta",), [Rational(1, 2)])
        assert f.diff() == PrefactoredFunction(
            Rational(1, 2), 0, ("eta",), [Rational(-1, 2)]
        )

    def test_add_needs_integer_offsets(self):
        basis = ("eta",)
        f = PrefactoredFunction(1, 0, basis, [Rational(1, 2)])
        g = PrefactoredFunction(1, 0, basis, [Rational(3, 2)])
        expected = PrefactoredFunction(_p(1 + ETA), 0, basis, f.exponents)
        assert f + g == expected

        with pytest.raises(UsageError):
            f + PrefactoredFunction(1, 0, basis, [1])

    def test_bases_must_agree(self):
        with pytest.raises(UsageError):
            PrefactoredFunction(1, 0, ("eta",)) * PrefactoredFunction(1)

    def test_proportionality(self):
        f = PrefactoredFunction(_p(2 * ETA), _p(-ETA))
        assert f.proportionality(f.with_ratfunc(_p(ETA))) == 2
        assert f.proportionality(f.with_ratfunc(1)) is None

    def test_evaluate(self):
        f = PrefactoredFunction(_p(ETA), _p(-(ETA**2)))
        values = f.evaluate(np.array([0.0, 1.0, 2.0]))
        expected = np.array([0.0, np.exp(-1.0), 2 * np.exp(-4.0)])
        assert np.allclose(values, expected)


class TestDiffOp:
    """
    Unit tests for solvableqm.exact.diffop
    """

    def test_apply(self):
        assert DiffOp.derivative(2).apply(_p(ETA**3)) == _p(6 * ETA)

    def test_compose(self):
        d = DiffOp.derivative()
        eta = DiffOp.multiplication(_p(ETA))
        # (d eta) f = f + eta f'
        assert d * eta == DiffOp([1, _p(ETA)])
        assert diffop_commutator(d, eta) == DiffOp([1])

    def test_zero_trimmed(self):
        assert DiffOp([0, 0]).is_zero
        assert DiffOp([_p(ETA), 0]).order == 0
