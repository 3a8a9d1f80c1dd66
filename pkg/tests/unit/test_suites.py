import pytest
from sympy import Rational

from solvableqm.errors import DomainError, InvariantViolation, UsageError
from solvableqm.models import ModelParams
from solvableqm.suites import (
    SUITES,
    SuiteRequest,
    Verdict,
    WorkerMap,
    exact_verdict,
    holds_verdict,
    nonzero_verdict,
    numeric_verdict,
    run_cases,
    run_suite,
    suite_models,
)


class TestVerdicts:
    """
    Unit tests for the verdict helpers in solvableqm.suites
    """

    def test_exact(self):
        assert exact_verdict("zero", lambda: 0).passed
        assert exact_verdict("empty", lambda: {"a": 0, "b": [0]}).passed

        failed = exact_verdict("one", lambda: Rational(1, 2))
        assert not failed.passed
        assert failed.residual == Rational(1, 2)

    def test_violation_becomes_failure(self):
        def broken():
            raise InvariantViolation("identity", residual=3, detail="bad")

        verdict = exact_verdict("identity", broken)
        assert not verdict.passed
        assert verdict.residual == 3
        assert "bad" in verdict.detail

    def test_domain_errors_propagate(self):
        def broken():
            raise DomainError("out of range")

        with pytest.raises(DomainError):
            holds_verdict("range", broken)

    def test_numeric(self):
        assert numeric_verdict("close", lambda: 1e-12, 1e-10).passed
        assert not numeric_verdict("far", lambda: 1e-3, 1e-10).passed
        assert not numeric_verdict("nan", lambda: float("nan"), 1.0).passed

    def test_nonzero(self):
        verdict = nonzero_verdict("constant", lambda: Rational(4), "c")
        assert verdict.passed
        assert verdict.detail == "c = 4"
        assert not nonzero_verdict("constant", lambda: 0, "c").passed

    def test_as_dict(self):
        verdict = Verdict("closure", True, 0).qualified("closure[J]")
        assert verdict.as_dict() == {
            "name": "closure[J] closure",
            "pass": True,
            "residual": 0,
            "detail": "",
        }


class TestSuiteRequest:
    """
    Unit tests for solvableqm.suites.SuiteRequest
    """

    def test_catalogue_defaults(self):
        request = SuiteRequest("krein-adler", "H")
        assert request.int_option("n-max") == 3
        assert request.option("D") == "1,2"
        with pytest.raises(UsageError):
            request.option("seeds")

    def test_options_override(self):
        request = SuiteRequest("shift", "H", options={"n-max": "2"})
        assert request.int_option("n-max") == 2

        request = SuiteRequest("shift", "H", options={"n-max": "two"})
        with pytest.raises(UsageError):
            request.int_option("n-max")

    def test_model_params(self):
        # catalogue model, then the suite's point, then the command line
        assert SuiteRequest("closure", "J").model_params() == ModelParams(
            g=Rational(3, 2), h=Rational(5, 2)
        )
        fuchs = SuiteRequest("fuchs", "J").model_params()
        assert fuchs.g == Rational(9, 2)
        given = SuiteRequest(
            "fuchs", "J", params=ModelParams(g=Rational(11, 2))
        ).model_params()
        assert given.g == Rational(11, 2)
        assert given.h == 4

    def test_tolerance_scale(self):
        request = SuiteRequest("unitarity", tolerance_scale=10.0)
        assert request.tolerance("unitarity") == pytest.approx(1e-9)

    def test_needs_model(self):
        with pytest.raises(UsageError):
            SuiteRequest("closure").system()


class TestRunSuite:
    """
    Unit tests for running suites end to end
    """

    def test_registry(self):
        assert "all" in SUITES
        assert "krein-adler" in SUITES
        assert suite_models("closure") == ["H", "L", "J"]
        assert suite_models("kdv") == []

    def test_closure(self):
        request = SuiteRequest(
            "closure", "J", params=ModelParams(g=1, h=3)
        )
        verdicts = run_suite(request)
        assert [v.name for v in verdicts] == ["closure[J] closure"]
        assert verdicts[0].passed

    def test_modelless_names(self):
        verdicts = run_suite(SuiteRequest("special", options={"N": 1}))
        assert [v.name for v in verdicts] == ["special special soliton(N=1)"]

    def test_duality_single(self):
        request = SuiteRequest("duality", "H", options={"D": "0", "N": 0})
        verdicts = run_suite(request)
        assert all(v.passed for v in verdicts)

    def test_every_catalogue_model(self):
        verdicts = run_suite(SuiteRequest("shape"))
        labels = {v.name.split()[0] for v in verdicts}
        assert labels == {
            "shape[H]",
            "shape[L]",
            "shape[J]",
            "shape[Soliton]",
        }
        assert all(v.passed for v in verdicts)

    def test_modelless_suites(self):
        verdicts = run_suite(SuiteRequest("special", options={"N": 2}))
        assert len(verdicts) == 2
        assert all(v.passed for v in verdicts)

        verdicts = run_suite(SuiteRequest("kdv"))
        assert all(v.passed for v in verdicts)

    def test_unitarity(self):
        request = SuiteRequest("unitarity", options={"h-values": "2,5/2"})
        verdicts = run_suite(request)
        assert len(verdicts) == 4
        assert all(v.passed for v in verdicts)

    def test_krein_adler(self):
        verdicts = run_suite(SuiteRequest("krein-adler", "H"))
        assert verdicts
        assert all(v.passed for v in verdicts)

    def test_rejects(self):
        with pytest.raises(UsageError):
            run_suite(SuiteRequest("nonsense"))
        with pytest.raises(UsageError):
            run_suite(SuiteRequest("closure", "Soliton"))

    def test_serial_worker_map(self):
        with WorkerMap(1) as mapper:
            assert mapper(abs, [-1, 2]) == [1, 2]

    def test_run_cases_order(self):
        cases = [SuiteRequest("shape", "L"), SuiteRequest("shape", "H")]
        names = [v.name for v in run_cases(cases)]
        assert names[0].startswith("shape[L]")
        assert names[-1].startswith("shape[H]")
