import pytest
from sympy import Rational

from solvableqm.errors import DomainError, UnsupportedModelError, UsageError
from solvableqm.models import make_model
from solvableqm.multi_indexed import (
    TYPE_ONE,
    TYPE_TWO,
    IndexSet,
    coincident_entries,
    complement_set,
    denominator_xi,
    duality_check,
    exceptional_poly,
    fuchs_residual,
    make_multi_indexed,
    multi_poly,
    orthogonality_factors,
    permutation_sign,
    plusdelta_check,
    plusdelta_constant,
    shift_relations_check,
    structural_identities,
    virtual_energy,
)

RADIAL = make_model("L", g=Rational(7, 2))
TRIG = make_model("J", g=Rational(7, 2), h=Rational(7, 2))
# h - g not an integer, so no two virtual energies meet
SKEW = make_model("J", g=Rational(9, 2), h=4)


class TestIndexSet:
    """
    Unit tests for solvableqm.multi_indexed.system.IndexSet
    """

    def test_parse(self):
        index_set = IndexSet.parse("2II,1I")
        assert index_set.type_one == (1,)
        assert index_set.type_two == (2,)
        assert index_set.ell == 4
        assert str(index_set) == "1I,2II"
        assert IndexSet.parse("3,1").type_one == (1, 3)

    def test_empty(self):
        index_set = IndexSet.parse("")
        assert index_set.is_empty
        assert index_set.ell == 0
        assert str(index_set) == "{}"

    def test_rejects(self):
        with pytest.raises(UsageError):
            IndexSet.parse("0I")
        with pytest.raises(UsageError):
            IndexSet.parse("1I,1I")
        with pytest.raises(UsageError):
            IndexSet.parse("xII")
        assert IndexSet([0], [], allow_zero=True).type_one == (0,)

    def test_ell(self):
        # ell = sum D - M(M-1)/2 - N(N-1)/2 + MN
        assert IndexSet((1, 2), (1,)).ell == 1 + 2 + 1 - 1 + 2

    def test_permutation_sign(self):
        canonical = [(TYPE_ONE, 1), (TYPE_TWO, 1)]
        assert permutation_sign(canonical, canonical) == 1
        assert permutation_sign(list(reversed(canonical)), canonical) == -1
        with pytest.raises(UsageError):
            permutation_sign([(TYPE_ONE, 2)], [(TYPE_ONE, 1)])


class TestMultiIndexed:
    """
    Unit tests for solvableqm.multi_indexed.system
    """

    def test_empty_set_is_classical(self):
        for n in range(4):
            p = multi_poly(RADIAL, IndexSet(), n).poly
            assert p == RADIAL.eigen_poly(n)

    @pytest.mark.parametrize("model", [RADIAL, SKEW], ids=repr)
    def test_degrees(self, model):
        index_set = IndexSet.parse("1I,1II")
        assert denominator_xi(model, index_set).degree() == index_set.ell
        for n in range(3):
            p = multi_poly(model, index_set, n).poly
            assert p.degree() == index_set.ell + n

    def test_order_does_not_matter(self):
        index_set = IndexSet.parse("1I,2I")
        canonical = denominator_xi(RADIAL, index_set)
        swapped = denominator_xi(
            RADIAL, index_set, order=[(TYPE_ONE, 2), (TYPE_ONE, 1)]
        )
        assert canonical == swapped

    @pytest.mark.parametrize("model", [RADIAL, TRIG], ids=repr)
    def test_fuchs_equation(self, model):
        system = make_multi_indexed(model, IndexSet.parse("1I,2II"))
        for n in range(4):
            assert fuchs_residual(system, n).is_zero

    @pytest.mark.parametrize("model", [RADIAL, SKEW], ids=repr)
    def test_shift_relations(self, model):
        system = make_multi_indexed(model, IndexSet.parse("1I,1II"))
        for n in range(1, 4):
            forward, backward = shift_relations_check(system, n)
            assert forward.is_zero
            assert backward.is_zero
        with pytest.raises(UsageError):
            shift_relations_check(system, 0)

    @pytest.mark.parametrize("model", [RADIAL, TRIG], ids=repr)
    def test_plusdelta(self, model):
        index_set = IndexSet.parse("1I,2II")
        system = make_multi_indexed(model, index_set)
        assert plusdelta_check(system) == plusdelta_constant(model, index_set)

    def test_type_one_nonsingular(self):
        system = make_multi_indexed(RADIAL, IndexSet.parse("2I"))
        assert system.certify().nonsingular

    def test_eigenfunctions_solve(self):
        system = make_multi_indexed(TRIG, IndexSet.parse("1I"))
        potential = system.potential()
        for n in range(3):
            residual = system.base.schrodinger_residual(
                system.eigenfunction(n),
                system.energy(n),
                potential - system.base.potential(),
            )
            assert residual.is_zero

    def test_bounds(self, mocker):
        model = make_model("L", g=2)
        index_set = IndexSet.parse("2II")
        with pytest.raises(DomainError):
            make_multi_indexed(model, index_set)

        warn = mocker.MagicMock()
        system = make_multi_indexed(model, index_set, unsafe=True, warn=warn)
        assert warn.called

    def test_coincident_energies(self):
        # type I and type II of equal degree meet when g = h
        index_set = IndexSet.parse("1I,1II")
        assert coincident_entries(TRIG, index_set) == [
            ((TYPE_ONE, 1), (TYPE_TWO, 1))
        ]
        assert virtual_energy(TRIG, (TYPE_ONE, 1)) == -40
        with pytest.raises(DomainError, match="share the virtual energy"):
            make_multi_indexed(TRIG, index_set, unsafe=True)

        # 1I and 2II meet when h - g = -1
        model = make_model("J", g=Rational(9, 2), h=Rational(7, 2))
        with pytest.raises(DomainError):
            denominator_xi(model, IndexSet.parse("1I,2II"))
        assert not coincident_entries(SKEW, IndexSet.parse("1I,2II"))
        assert not coincident_entries(RADIAL, IndexSet.parse("1I,1II"))
        assert system.unsafe

    def test_unsupported_models(self):
        with pytest.raises(UnsupportedModelError):
            make_multi_indexed(make_model("H"), IndexSet.parse("1I"))

    def test_orthogonality_factors(self):
        assert orthogonality_factors(RADIAL, IndexSet(), 3) == 1
        # n + g + d + 1/2 with n = 0, g = 7/2, d = 1
        assert orthogonality_factors(RADIAL, IndexSet.parse("1I"), 0) == 5


class TestStructural:
    """
    Unit tests for solvableqm.multi_indexed.exceptional
    """

    @pytest.mark.parametrize("model", [RADIAL, TRIG], ids=repr)
    @pytest.mark.parametrize("kind", [TYPE_ONE, TYPE_TWO])
    def test_exceptional(self, model, kind):
        index_set = IndexSet([1], []) if kind == TYPE_ONE else IndexSet([], [1])
        report = structural_identities(model, index_set, n_max=2)
        assert len(report.exceptional) == 3
        assert report.plusdelta is not None

    @pytest.mark.parametrize("model", [RADIAL, TRIG], ids=repr)
    def test_exceptional_degree(self, model):
        for n in range(3):
            assert exceptional_poly(model, TYPE_ONE, 2, n).degree() == 2 + n

    def test_exceptional_arguments(self):
        with pytest.raises(UsageError):
            exceptional_poly(RADIAL, TYPE_ONE, 0, 1)
        with pytest.raises(UsageError):
            exceptional_poly(RADIAL, "III", 1, 1)

    @pytest.mark.parametrize("model", [RADIAL, TRIG], ids=repr)
    def test_level_zero(self, model):
        index_set = IndexSet([0, 2], [1], allow_zero=True)
        report = structural_identities(model, index_set, n_max=1)
        assert report.plusdelta is None
        assert set(report.level_zero) == {"I:n=0", "I:n=1"}


class TestDuality:
    """
    Unit tests for solvableqm.multi_indexed.duality
    """

    def test_complement(self):
        assert complement_set([0, 2], 3) == (0, 2)
        assert complement_set([0], 0) == ()

    def test_harmonic_single(self):
        report = duality_check(make_model("H"), [0], 0)
        assert report.complement == ()
        assert report.nonsingular
        assert report.potential_residual.is_zero

    @pytest.mark.parametrize(
        "model",
        [make_model("H"), RADIAL, TRIG],
        ids=repr,
    )
    def test_duality(self, model):
        report = duality_check(model, [1, 2], n_max=2)
        assert report.top == 2
        assert report.complement == (2,)
        assert report.wronskian_constant != 0
        assert sorted(report.eigen_constants) == [0, 1, 2]

    def test_first_violation(self):
        report = duality_check(make_model("H"), [1], 2)
        assert report.complement == (0, 2)
        assert not report.nonsingular
        assert report.first_violation == 1

    def test_arguments(self):
        with pytest.raises(UsageError):
            duality_check(make_model("H"), [])
        with pytest.raises(UsageError):
            duality_check(make_model("H"), [2], 1)
        with pytest.raises(UnsupportedModelError):
            duality_check(make_model("Soliton", h=3), [0])
