import pytest
from sympy import Rational

from solvableqm.darboux import (
    Boundary,
    SeedClass,
    SeedKind,
    SeedSpec,
    adler_condition,
    boundary_behaviour,
    certify_nonsingular,
    crum_tower,
    deform_system,
    deformed_weight,
    krein_adler,
    make_seed,
    norm_ratio,
    order_independent,
)
from solvableqm.darboux import deform as deform_module
from solvableqm.errors import DomainError, UnsupportedModelError, UsageError
from solvableqm.models import make_model


def _seeds(*texts):
    return [SeedSpec.parse(t) for t in texts]


class TestSeeds:
    """
    Unit tests for solvableqm.darboux.seeds
    """

    def test_parse(self):
        spec = SeedSpec.parse("vI:2")
        assert spec.kind == SeedKind.VIRTUAL_I
        assert spec.index == 2
        assert str(spec) == "virtual-I:2"
        assert SeedSpec.parse("VII:0").kind == SeedKind.VIRTUAL_II
        assert SeedSpec.parse("os:4").kind == SeedKind.OVERSHOOT

    def test_parse_errors(self):
        for text in ("x:1", "e", "p:two"):
            with pytest.raises(UsageError):
                SeedSpec.parse(text)
        with pytest.raises(UsageError):
            SeedSpec.parse("e:-1")
        with pytest.raises(UsageError):
            SeedSpec(SeedKind.FREE)

    def test_harmonic_classes(self):
        model = make_model("H")
        eigen = make_seed(model, SeedSpec.parse("e:1"))
        assert eigen.classification == SeedClass.EIGEN
        assert eigen.energy == 2

        pseudo = make_seed(model, SeedSpec.parse("p:2"))
        assert pseudo.classification == SeedClass.PSEUDO
        assert pseudo.energy == -6

    def test_boundary_behaviour(self):
        model = make_model("H")
        eigen = make_seed(model, SeedSpec.parse("e:1"))
        assert boundary_behaviour(model, eigen.fn) == [
            Boundary.INTEGRABLE,
            Boundary.INTEGRABLE,
        ]
        pseudo = make_seed(model, SeedSpec.parse("p:1"))
        assert boundary_behaviour(model, pseudo.fn) == [
            Boundary.DIVERGENT,
            Boundary.DIVERGENT,
        ]

    def test_radial_classes(self):
        model = make_model("L", g=Rational(5, 2))
        assert (
            make_seed(model, SeedSpec.parse("vI:1")).classification
            == SeedClass.TYPE_I
        )
        assert (
            make_seed(model, SeedSpec.parse("vII:1")).classification
            == SeedClass.TYPE_II
        )
        assert (
            make_seed(model, SeedSpec.parse("p:0")).classification
            == SeedClass.PSEUDO
        )

    def test_seed_energies_solve(self):
        model = make_model("J", g=Rational(7, 2), h=Rational(5, 2))
        for text in ("vI:1", "vII:2", "p:1"):
            seed = make_seed(model, SeedSpec.parse(text))
            assert model.schrodinger_residual(seed.fn, seed.energy).is_zero

    def test_index_ranges(self):
        model = make_model("J", g=2, h=Rational(3, 2))
        with pytest.raises(DomainError):
            make_seed(model, SeedSpec.parse("vI:1"))

        soliton = make_model("Soliton", h=Rational(5, 2))
        with pytest.raises(DomainError):
            make_seed(soliton, SeedSpec.parse("os:3"))

    def test_unsupported(self):
        with pytest.raises(UnsupportedModelError):
            make_seed(make_model("H"), SeedSpec.parse("vI:0"))
        free = SeedSpec(SeedKind.FREE, k=Rational(1), c=Rational(2))
        with pytest.raises(UnsupportedModelError):
            make_seed(make_model("H"), free)


class TestDeform:
    """
    Unit tests for solvableqm.darboux.deform
    """

    def test_adler_condition(self):
        assert adler_condition([1, 2]) is None
        assert adler_condition([2, 3, 5, 6]) is None
        assert adler_condition([1]) == 0
        assert adler_condition([0, 2]) == 1

    def test_krein_adler_harmonic(self):
        system = krein_adler(make_model("H"), [1, 2])
        assert system.levels(5) == [0, 3, 4, 5]
        for n in system.levels(5):
            assert system.eigen_residual(n).is_zero
        assert certify_nonsingular(system).nonsingular
        assert norm_ratio(system, 0) == 8
        assert norm_ratio(system, 3) == 8

    def test_krein_adler_refuses(self):
        with pytest.raises(DomainError):
            krein_adler(make_model("H"), [1])

    def test_krein_adler_unsafe(self, mocker):
        warn = mocker.MagicMock()
        system = krein_adler(make_model("H"), [1], unsafe=True, warn=warn)
        warn.assert_called_once()
        assert system.unsafe
        assert not certify_nonsingular(system).nonsingular

    def test_deleted_level(self):
        system = krein_adler(make_model("H"), [1, 2])
        with pytest.raises(DomainError):
            system.energy(1)
        with pytest.raises(DomainError):
            system.eigenfunction(2)

    def test_pseudo_adds_level(self):
        system = deform_system(make_model("H"), _seeds("p:0"))
        assert system.extra_residual(0).is_zero
        assert system.eigen_residual(2).is_zero
        eigen = deform_system(make_model("H"), _seeds("e:0"))
        with pytest.raises(UsageError):
            eigen.extra_eigenfunction(0)

    def test_seed_list_errors(self):
        with pytest.raises(UsageError):
            deform_system(make_model("H"), [])
        with pytest.raises(UsageError):
            deform_system(make_model("H"), _seeds("p:1", "p:1"))

    def test_order_independent(self):
        model = make_model("L", g=Rational(5, 2))
        assert order_independent(model, _seeds("vI:1", "vII:0"))

    def test_order_independent_three_seeds(self, mocker):
        spy = mocker.spy(deform_module, "deform_system")
        model = make_model("L", g=Rational(7, 2))
        assert order_independent(model, _seeds("vI:1", "vII:0", "vI:2"))
        # every one of the 3! orderings is built
        assert spy.call_count == 6

        harmonic = make_model("H")
        assert order_independent(harmonic, _seeds("p:0", "p:1", "p:2"))

    @pytest.mark.parametrize(
        "model",
        [make_model("H"), make_model("J", g=2, h=Rational(3, 2))],
        ids=repr,
    )
    def test_crum_tower(self, model):
        report = crum_tower(model, 2)
        assert report.potential_residual.is_zero
        assert report.constants
        assert all(c != 0 for c in report.constants.values())

    def test_crum_tower_height(self):
        with pytest.raises(UsageError):
            crum_tower(make_model("H"), 0)

    def test_deformed_weight(self):
        system = krein_adler(make_model("H"), [1, 2])
        weight = deformed_weight(system)
        assert not weight.is_zero

        pseudo = deform_system(make_model("H"), _seeds("p:0"))
        with pytest.raises(UsageError):
            deformed_weight(pseudo)
