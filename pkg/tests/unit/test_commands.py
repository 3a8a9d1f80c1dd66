import pytest

from solvableqm import commands
from solvableqm.errors import UnsupportedModelError, UsageError
from solvableqm.suites import Verdict


class TestRegistry:
    """
    Unit tests for solvableqm.commands
    """

    def test_available(self):
        assert commands.available_local == [
            "deform",
            "duality",
            "multi",
            "sample",
            "scatter",
            "soliton",
            "spectrum",
            "table",
            "verify",
        ]
        assert commands.summary("verify").startswith("Run a verification")

    def test_unknown_command(self, json_cli):
        with pytest.raises(UsageError):
            commands.invoke("nodes", [], commands.CommandContext(json_cli))

    def test_abbreviations_rejected(self, run_command):
        with pytest.raises(SystemExit):
            run_command("spectrum", "--mod", "H")


class TestSpectrum:
    """
    Unit tests for solvableqm.commands.spectrum
    """

    def test_harmonic(self, run_command):
        code, report = run_command("spectrum", "--model", "H", "--n-max", "3")

        assert code == 0
        assert report["command"] == "spectrum"
        assert report["inputs"]["model"] == "H"
        assert report["results"]["bound-states"] == "infinite"
        energies = [row["energy"] for row in report["results"]["spectrum"]]
        assert energies == ["0", "2", "4", "6"]

    def test_krein_adler(self, run_command):
        _, report = run_command("spectrum", "--model", "H", "--delete", "1,2")
        levels = [row["level"] for row in report["results"]["spectrum"]]
        assert levels == [0, 3, 4, 5]

    def test_soliton(self, run_command):
        _, report = run_command("spectrum", "--model", "Soliton", "--h", "5/2")
        assert report["results"]["bound-states"] == 3

    def test_pseudo_seed_adds_level(self, run_command):
        _, report = run_command(
            "spectrum", "--model", "H", "--seeds", "p:0", "--n-max", "1"
        )
        rows = report["results"]["spectrum"]
        assert rows[0] == {"level": "pseudo:0", "energy": "-2", "value": -2.0}

    def test_requires_model(self, run_command):
        with pytest.raises(UsageError):
            run_command("spectrum")

    def test_one_deformation(self, run_command):
        with pytest.raises(UsageError):
            run_command(
                "spectrum",
                "--model",
                "L",
                "--g",
                "7/2",
                "--delete",
                "1",
                "--D",
                "1I",
            )


class TestDeform:
    """
    Unit tests for solvableqm.commands.deform
    """

    def test_krein_adler(self, run_command):
        code, report = run_command("deform", "--model", "H", "--delete", "1,2")

        assert code == 0
        assert all(v["pass"] for v in report["verdicts"])
        names = [v["name"] for v in report["verdicts"]]
        assert "nonsingular" in names
        assert "deformed eigen(3)" in names

    def test_unsafe(self, run_command):
        code, report = run_command(
            "deform", "--model", "H", "--delete", "1", "--unsafe"
        )

        assert code == 0
        assert report["results"]["nonsingular"] is False
        assert "nonsingular" not in [v["name"] for v in report["verdicts"]]

    def test_seeds(self, run_command):
        _, report = run_command(
            "deform", "--model", "L", "--g", "5/2", "--seeds", "vI:1,vII:0"
        )

        assert "order-independent" in [v["name"] for v in report["verdicts"]]

    def test_crum(self, run_command):
        code, report = run_command(
            "deform", "--model", "J", "--g", "2", "--h", "3/2", "--crum", "2"
        )

        assert code == 0
        assert report["verdicts"][0]["name"] == "crum(s=2)"

    def test_exactly_one(self, run_command):
        with pytest.raises(UsageError):
            run_command("deform", "--model", "H")
        with pytest.raises(UsageError):
            run_command(
                "deform", "--model", "H", "--delete", "1,2", "--crum", "1"
            )


class TestStructureCommands:
    """
    Unit tests for solvableqm.commands.multi, duality and table
    """

    def test_multi(self, run_command):
        code, report = run_command(
            "multi", "--model", "L", "--g", "7/2", "--D", "2I", "--n-max", "2"
        )

        assert code == 0
        assert report["results"]["ell"] == 2
        degrees = [row["degree"] for row in report["results"]["polynomials"]]
        assert degrees == [2, 3, 4]

    def test_multi_needs_index_set(self, run_command):
        with pytest.raises(UsageError):
            run_command("multi", "--model", "L", "--g", "7/2")

    def test_duality(self, run_command):
        code, report = run_command("duality", "--model", "H", "--D", "1,2")

        assert code == 0
        assert report["results"]["complement"] == [2]
        assert report["verdicts"][0]["pass"]

    def test_table_eigen(self, run_command):
        _, report = run_command(
            "table", "eigen", "--model", "H", "--n-max", "2"
        )
        rows = report["results"]["eigen"]
        assert [row["degree"] for row in rows] == [0, 1, 2]

    def test_table_recurrence(self, run_command):
        _, report = run_command(
            "table", "recurrence", "--model", "L", "--g", "3/2", "--n-max", "1"
        )
        assert report["results"]["family"] == "Laguerre"
        assert len(report["results"]["recurrence"]) == 2

    def test_table_exceptional(self, run_command):
        _, report = run_command(
            "table", "exceptional", "--model", "L", "--g", "7/2", "--ell", "2"
        )
        degrees = [r["degree"] for r in report["results"]["exceptional"]]
        assert degrees[:3] == [2, 3, 4]

    def test_table_unsupported(self, run_command):
        with pytest.raises(UnsupportedModelError):
            run_command("table", "virtual", "--model", "H")


class TestSample:
    """
    Unit tests for solvableqm.commands.sample
    """

    def test_wavefunction(self, run_command):
        code, report = run_command(
            "sample",
            "wavefunction",
            "--model",
            "H",
            "--n",
            "2",
            "--points",
            "1025",
        )

        assert code == 0
        assert report["results"]["sign-changes"] == 2
        assert len(report["results"]["wavefunction"]) == 1025

    def test_points_from_config(self, run_command):
        # MOCK_CONFIG sets points = 257
        _, report = run_command(
            "sample", "potential", "--model", "H", "--xmin", "-2", "--xmax", "2"
        )
        assert len(report["results"]["potential"]) == 257

    def test_csv_by_default(self, mock_cli, capsys):
        commands.invoke(
            "sample",
            ["potential", "--k", "1", "--c", "2", "--points", "17"],
            commands.CommandContext(mock_cli),
        )

        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "x,U,flagged"
        assert len(lines) == 18

    def test_amplitudes(self, run_command):
        _, report = run_command(
            "sample", "amplitudes", "--h", "2", "--points", "20"
        )
        for row in report["results"]["amplitudes"]:
            assert row["|r|"] == 0.0
            assert row["|t|^2+|r|^2"] == pytest.approx(1.0)

    def test_one_of_n_and_seed(self, run_command):
        with pytest.raises(UsageError):
            run_command("sample", "wavefunction", "--model", "H")


class TestScattering:
    """
    Unit tests for solvableqm.commands.scatter and soliton
    """

    def test_scatter(self, run_command):
        code, report = run_command("scatter", "--h", "2")

        assert code == 0
        assert report["results"]["reflectionless"] is True
        assert report["results"]["r"] == "0"
        assert "G(" not in report["results"]["t"]

    def test_scatter_deformed(self, run_command):
        code, report = run_command("scatter", "--h", "5/2", "--seeds", "p:0")

        assert code == 0
        assert report["results"]["plus"] == ["7/2"]
        assert all(v["pass"] for v in report["verdicts"])

    def test_half_line_needs_seeds(self, run_command):
        with pytest.raises(UsageError):
            run_command("scatter", "--h", "2", "--side", "half")

    def test_soliton(self, run_command):
        code, report = run_command(
            "soliton", "--k", "1,2", "--c", "6,12", "--t", "1/4"
        )

        assert code == 0
        assert report["results"]["energies"] == ["-1", "-4"]
        assert report["results"]["vandermonde"] == "1"

    def test_special(self, run_command):
        code, report = run_command("soliton", "--special", "2")

        assert code == 0
        assert report["results"]["c"] == ["6", "12"]

    def test_special_excludes_k(self, run_command):
        with pytest.raises(UsageError):
            run_command("soliton", "--special", "2", "--k", "1,2")


class TestVerify:
    """
    Unit tests for solvableqm.commands.verify
    """

    def test_closure(self, run_command):
        code, report = run_command("verify", "closure", "--model", "J")

        assert code == 0
        assert report["results"]["checks"] == 1
        assert report["results"]["failed"] == 0
        assert report["inputs"]["tolerances"]["unitarity"] == 1e-10

    def test_failure_exit_code(self, run_command, mocker):
        mocker.patch(
            "solvableqm.commands.verify.run_suite",
            return_value=[Verdict("broken", False, 1)],
        )
        code, report = run_command("verify", "closure")

        assert code == 1
        assert report["results"]["failed"] == 1

    def test_tolerance_scale(self, run_command):
        _, report = run_command(
            "verify", "unitarity", "--h-values", "2", "--tolerance-scale", "10"
        )
        assert report["inputs"]["tolerances"]["unitarity"] == pytest.approx(
            1e-9
        )
        with pytest.raises(UsageError):
            run_command("verify", "closure", "--tolerance-scale", "0")

    def test_jobs(self, run_command):
        with pytest.raises(UsageError):
            run_command("verify", "closure", "--jobs", "0")
