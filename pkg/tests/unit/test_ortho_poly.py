import pytest
from sympy import Rational

from solvableqm.errors import DomainError
from solvableqm.exact import X, coeffs_ascending
from solvableqm.ortho_poly import (
    FamilyId,
    FamilyKind,
    RecurrenceCoeffs,
    classical_poly,
    diffeq_residual,
    recurrence_coeffs,
    rodrigues_poly,
    twisted_hermite,
)
from tests.unit.conftest import _get_parsed_yaml

FAMILIES = [
    FamilyId.hermite(),
    FamilyId.laguerre(0),
    FamilyId.laguerre(Rational(1, 2)),
    FamilyId.jacobi(0, 0),
    FamilyId.jacobi(Rational(3, 2), Rational(-1, 2)),
]


def _expected(coeffs):
    return [Rational(c) for c in coeffs]


class TestOrthoPoly:
    """
    Unit tests for solvableqm.ortho_poly
    """

    def test_hermite_table(self):
        table = _get_parsed_yaml("classical_coefficients.yaml")["hermite"]
        for n, coeffs in table.items():
            p = classical_poly(FamilyId.hermite(), n)
            assert coeffs_ascending(p) == _expected(coeffs)

    def test_laguerre_table(self):
        table = _get_parsed_yaml("classical_coefficients.yaml")["laguerre"]
        for alpha, rows in table.items():
            family = FamilyId.laguerre(Rational(alpha))
            for n, coeffs in rows.items():
                p = classical_poly(family, n)
                assert coeffs_ascending(p) == _expected(coeffs)

    def test_jacobi_table(self):
        table = _get_parsed_yaml("classical_coefficients.yaml")["jacobi"]
        for params, rows in table.items():
            alpha, beta = (Rational(v) for v in params.split(","))
            family = FamilyId.jacobi(alpha, beta)
            for n, coeffs in rows.items():
                p = classical_poly(family, n)
                assert coeffs_ascending(p) == _expected(coeffs)

    def test_polynomials_use_x(self):
        assert classical_poly(FamilyId.hermite(), 2).gen == X

    @pytest.mark.parametrize("family", FAMILIES)
    def test_differential_equation(self, family):
        for n in range(6):
            assert diffeq_residual(family, n).is_zero

    @pytest.mark.parametrize("family", FAMILIES)
    def test_recurrence_matches_closed_form(self, family):
        for n in range(5):
            coeffs = recurrence_coeffs(family, n)
            assert isinstance(coeffs, RecurrenceCoeffs)

    def test_hermite_recurrence(self):
        assert recurrence_coeffs(FamilyId.hermite(), 3) == (
            Rational(1, 2),
            0,
            3,
        )

    @pytest.mark.parametrize("family", FAMILIES)
    def test_rodrigues(self, family):
        for n in range(5):
            _, ratio = rodrigues_poly(family, n)
            assert ratio != 0

    def test_rodrigues_normalization(self):
        # the Laguerre and Jacobi formulas reproduce P_n exactly
        for family in FAMILIES[1:]:
            assert rodrigues_poly(family, 3)[1] == 1
        assert rodrigues_poly(FamilyId.hermite(), 3)[1] == 1

    def test_twisted_hermite_positive(self):
        for n in range(7):
            p = twisted_hermite(n)
            assert all(c >= 0 for c in coeffs_ascending(p))
            assert p.degree() == n

    def test_bad_parameters(self):
        with pytest.raises(DomainError):
            classical_poly(FamilyId.laguerre(-1), 2)
        with pytest.raises(DomainError):
            classical_poly(FamilyId.jacobi(0, Rational(-3, 2)), 2)
        with pytest.raises(DomainError):
            classical_poly(FamilyId.hermite(), -1)

    def test_family_kind_values(self):
        assert FamilyKind.jacobi.value == "Jacobi"
