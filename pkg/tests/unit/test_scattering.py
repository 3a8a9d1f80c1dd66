import numpy as np
import pytest
from sympy import QQ, Poly, Rational

from solvableqm.darboux import SeedSpec
from solvableqm.errors import (
    DomainError,
    PoleError,
    UsageError,
)
from solvableqm.exact import RatFunc
from solvableqm.scattering import (
    IK,
    AffineForm,
    AmplitudeExpr,
    DeformationFactor,
    ExpRatio,
    ExpSum,
    ReflectionlessSpec,
    Side,
    amplitude_symmetry_check,
    deform_amplitudes,
    deformation_identity_check,
    evaluate_amplitude,
    expsum_wronskian,
    kay_moses,
    kdv_evolve,
    pole_scan,
    positivity_check,
    seed_coefficients,
    shape_constraint_check,
    single_soliton_check,
    soliton_amplitudes,
    soliton_asymptotic_exponents,
    special_soliton,
    special_soliton_check,
    unit_modulus_residual,
    unitarity_residual,
    wronskian_equivalence,
)

KS = [0.25, 0.5, 1.0, 1.7, 3.0]
XS = np.linspace(-5.0, 5.0, 101)


def _s(expr):
    return Poly(expr, IK, domain=QQ)


class TestAmplitudes:
    """
    Unit tests for solvableqm.scattering.amplitudes
    """

    def test_integer_strength_is_reflectionless(self):
        _, r = soliton_amplitudes(2)
        assert r.vanishes
        assert evaluate_amplitude(r, 1.3) == 0j

        _, r = soliton_amplitudes(Rational(5, 2))
        assert not r.vanishes

    def test_strength_bound(self):
        with pytest.raises(DomainError):
            soliton_amplitudes(Rational(1, 2))

    @pytest.mark.parametrize("h", [Rational(5, 2), 2, Rational(7, 3)])
    def test_unitarity(self, h):
        assert unitarity_residual(h, KS) < 1e-12

    def test_integer_transmission_modulus(self):
        t, _ = soliton_amplitudes(3)
        for k in KS:
            assert abs(abs(evaluate_amplitude(t, k)) - 1) < 1e-12

    @pytest.mark.parametrize("h", [Rational(5, 2), Rational(7, 3)])
    def test_shape_constraint(self, h):
        t_worst, r_worst = shape_constraint_check(h, KS)
        assert t_worst < 1e-10
        assert r_worst < 1e-10

    def test_symmetry(self):
        assert amplitude_symmetry_check(Rational(5, 2), KS) < 1e-10

    def test_simplified(self):
        expr = AmplitudeExpr((AffineForm(3, 1),), (AffineForm(1, 1),))
        simple = expr.simplified()
        assert simple.is_rational()
        assert simple.rational == RatFunc(_s((IK + 1) * (IK + 2)))

    def test_text_form(self):
        t, r = soliton_amplitudes(2)
        assert r.vanishes is True
        assert str(r) == "0"
        text = str(t.simplified())
        assert "ik" in text
        assert "G(" not in text
        assert "RatFunc" not in text

        t, r = soliton_amplitudes(Rational(5, 2))
        assert r.vanishes is False
        assert str(t).startswith("[G(")

    def test_rational_pole(self):
        expr = AmplitudeExpr(rational=RatFunc(_s(1), _s(IK)))
        with pytest.raises(PoleError):
            evaluate_amplitude(expr, 0.0)

    @pytest.mark.parametrize("h", [Rational(5, 2), 2])
    def test_pole_scan(self, h):
        scan = pole_scan(h)
        assert len(scan.kappas) == len(scan.expected)
        for found, expected in zip(scan.kappas, scan.expected):
            assert abs(found - float(expected)) < 1e-8

    def test_pole_scan_half_integer(self):
        assert pole_scan(Rational(5, 2)).expected == (
            Rational(1, 2),
            Rational(3, 2),
            Rational(5, 2),
        )


class TestDeformedAmplitudes:
    """
    Unit tests for the deformation factors in solvableqm.scattering
    """

    def test_pseudo_exponents(self):
        h = Rational(5, 2)
        found = soliton_asymptotic_exponents(h, SeedSpec.parse("p:0"))
        assert found.plus == Rational(7, 2)
        assert found.minus == Rational(-7, 2)
        assert found.energy == Rational(-49, 4)

    def test_eigen_seeds_rejected(self):
        with pytest.raises(UsageError):
            soliton_asymptotic_exponents(2, SeedSpec.parse("e:0"))

    def test_full_line(self):
        h = Rational(5, 2)
        factor = DeformationFactor.from_soliton_seeds(
            h, [SeedSpec.parse("p:0"), SeedSpec.parse("p:1")]
        )
        assert unit_modulus_residual(factor, KS) < 1e-12

        common = deformation_identity_check(factor)
        assert common == factor.transmission_factor()

        t, r = deform_amplitudes(*soliton_amplitudes(h), factor)
        for k in KS:
            total = abs(evaluate_amplitude(t, k)) ** 2
            total += abs(evaluate_amplitude(r, k)) ** 2
            assert abs(total - 1) < 1e-12

    def test_poles_move(self):
        h = Rational(5, 2)
        factor = DeformationFactor.from_soliton_seeds(
            h, [SeedSpec.parse("p:0")]
        )
        scan = pole_scan(h, factor)
        assert Rational(7, 2) in scan.expected

    def test_half_line(self):
        factor = DeformationFactor((Rational(7, 2),), side=Side.HALF)
        with pytest.raises(UsageError):
            factor.transmission_factor()
        t, r = deform_amplitudes(None, soliton_amplitudes(3)[1], factor)
        assert t is None
        assert r.vanishes
        assert unit_modulus_residual(factor, KS) < 1e-12

    def test_factor_errors(self):
        with pytest.raises(UsageError):
            DeformationFactor((Rational(1),), ())
        factor = DeformationFactor((Rational(1),), (Rational(2),))
        with pytest.raises(UsageError):
            deformation_identity_check(factor)


class TestExpSum:
    """
    Unit tests for solvableqm.scattering.expsum
    """

    def test_algebra(self):
        a = ExpSum.exponential(1)
        b = ExpSum.exponential(-1)
        assert a * b == 1
        assert (a + b).dx() == a - b
        assert (a - a).is_zero

    def test_wronskian(self):
        # W[e^x, e^(2x)] = e^(3x)
        w = expsum_wronskian([ExpSum.exponential(1), ExpSum.exponential(2)])
        assert w == ExpSum.exponential(3)

    def test_ratio_equality(self):
        u = ExpSum.exponential(-2) + 1
        half = ExpRatio(ExpSum.constant(1), u, 1)
        assert half.equals(ExpRatio(u, u, 2))
        with pytest.raises(UsageError):
            ExpRatio(ExpSum.constant(1), ExpSum(), 1)


class TestReflectionless:
    """
    Unit tests for solvableqm.scattering.reflectionless
    """

    def test_spec_validation(self):
        with pytest.raises(UsageError):
            ReflectionlessSpec((2, 1), (1, 1))
        with pytest.raises(UsageError):
            ReflectionlessSpec((1,), (-1,))
        with pytest.raises(UsageError):
            ReflectionlessSpec((1, 2), (1,))
        with pytest.raises(UsageError):
            ReflectionlessSpec((), ())

    def test_single_soliton_value(self):
        spec = ReflectionlessSpec((1,), (2,))
        potential = kay_moses(spec).potential
        assert potential.evaluate(np.array([0.0]))[0] == pytest.approx(-2.0)
        assert single_soliton_check(spec) == 1

    def test_seed_coefficients_alternate(self):
        spec = ReflectionlessSpec((1, 2, 3), (1, 5, 2))
        for j, c in enumerate(seed_coefficients(spec)):
            assert c * (-1) ** j > 0

    @pytest.mark.parametrize(
        "ks,cs",
        [((1,), (2,)), ((1, 2), (6, 12)), ((Rational(1, 2), 1, 2), (1, 1, 1))],
    )
    def test_wronskian_equivalence(self, ks, cs):
        report = wronskian_equivalence(ReflectionlessSpec(ks, cs), XS)
        assert report.deviation < 1e-8
        assert report.plane_wave_plus.degree() == len(ks)

    def test_positivity(self):
        spec = ReflectionlessSpec((1, 2), (6, 12))
        report = positivity_check(spec, XS)
        assert report.min_u > 0
        assert report.max_potential < 0

    def test_kdv_exact(self):
        spec = ReflectionlessSpec((1, 2), (6, 12))
        result = kdv_evolve(spec, Rational(1, 4))
        assert result.exact
        assert result.max_residual == 0.0

    def test_kdv_numeric(self):
        spec = special_soliton(3)
        result = kdv_evolve(spec, Rational(-1, 10))
        assert not result.exact
        assert result.time == Rational(-1, 10)

    def test_special_soliton(self):
        spec = special_soliton(2)
        assert spec.ks == (1, 2)
        assert spec.cs == (6, 12)
        for size in (1, 2, 3):
            special_soliton_check(size)
        with pytest.raises(UsageError):
            special_soliton(0)

    def test_special_potential(self):
        # -N(N+1)/cosh^2 x at x = 0 for N = 2
        potential = kay_moses(special_soliton(2)).potential
        assert potential.evaluate(np.array([0.0]))[0] == pytest.approx(-6.0)

    def test_single_profile_needs_one(self):
        with pytest.raises(UsageError):
            single_soliton_check(special_soliton(2))
