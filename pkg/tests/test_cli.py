import json

import pytest
import voluptuous as vol

from moyal.cli.commands import witness as witness_command
from moyal.cli.main import main
from moyal.cli.schemas import float_list, grid_pair, int_list
from moyal.const import EXIT_INVARIANT, EXIT_OK, EXIT_VALIDATION
from moyal.grids import read_field


def _manifest(prefix):
    return json.loads(prefix.with_name(prefix.name + ".manifest.json").read_text())


def _file(prefix, suffix):
    return prefix.with_name(prefix.name + suffix)


class TestSchemas:
    def test_grid_pair(self):
        assert grid_pair("64,8") == (64, 8.0)
        assert grid_pair((32, 4)) == (32, 4.0)

    @pytest.mark.parametrize("text", ["abc", "64", "64,8,2", "x,8"])
    def test_bad_grid(self, text):
        with pytest.raises(vol.Invalid):
            grid_pair(text)

    def test_lists(self):
        assert float_list("1e-1, 0.01") == [0.1, 0.01]
        assert int_list("2,4,6") == [2, 4, 6]


class TestProp1:
    def test_gaussian_diverges(self, tmp_path):
        prefix = tmp_path / "prop1"
        assert main(["prop1", "--out", str(prefix), "--gamma", "2", "--nmax", "10"]) == EXIT_OK
        manifest = _manifest(prefix)
        assert manifest["command"] == "prop1"
        assert manifest["summary"]["verdict"] == "Diverges"
        assert manifest["summary"]["max_rel_err"] < 5e-3
        assert manifest["parameters"]["gamma"] == 2.0
        for key in ("schema_version", "seed", "version", "outputs", "started_at", "wall_clock"):
            assert key in manifest
        header = _file(prefix, ".csv").read_text().splitlines()[0]
        assert header.startswith("n,u_sign,u_log10")

    def test_csv_is_reproducible(self, tmp_path):
        first, second = tmp_path / "a", tmp_path / "b"
        assert main(["prop1", "--out", str(first), "--gamma", "1.5", "--nmax", "8"]) == EXIT_OK
        assert main(["prop1", "--out", str(second), "--gamma", "1.5", "--nmax", "8"]) == EXIT_OK
        assert _file(first, ".csv").read_bytes() == _file(second, ".csv").read_bytes()

    def test_order_cap(self, tmp_path):
        assert main(["prop1", "--out", str(tmp_path / "p"), "--gamma", "2", "--nmax", "21"]) == EXIT_VALIDATION


class TestStar:
    def test_shift_product(self, tmp_path):
        prefix = tmp_path / "star"
        argv = ["star", "--out", str(prefix), "--preset", "gauss1", "--theta", "symplectic2", "--grid", "64,8"]
        assert main(argv) == EXIT_OK
        field = read_field(_file(prefix, ".field"))
        assert field.spec.n == 64
        assert complex(_manifest(prefix)["summary"]["value_at_origin"]).real == pytest.approx(0.5, rel=1e-8)
        assert _file(prefix, ".csv").exists()

    def test_zero_theta_is_pointwise(self, tmp_path):
        prefix = tmp_path / "zero"
        argv = ["star", "--out", str(prefix), "--preset", "gauss2", "--theta", "zero", "--grid", "64,6"]
        assert main(argv) == EXIT_OK
        assert _manifest(prefix)["summary"]["zero_theta_sup_deviation"] <= 1e-10

    def test_zero_theta_off_tolerance_is_an_invariant_breach(self, tmp_path):
        # the 64,8 momentum box cuts e^{−p²/8} near 3e-9 of its peak
        prefix = tmp_path / "coarse"
        argv = ["star", "--out", str(prefix), "--preset", "gauss2", "--theta", "zero", "--grid", "64,8"]
        assert main(argv) == EXIT_INVARIANT
        assert _file(prefix, ".field").exists()
        assert not (tmp_path / "coarse.manifest.json").exists()

    def test_direct_rejects_degenerate_theta(self, tmp_path):
        argv = ["star", "--out", str(tmp_path / "d"), "--preset", "gauss1", "--theta", "degenerate", "--algo", "direct", "--grid", "32,8"]
        assert main(argv) == EXIT_VALIDATION
        assert not (tmp_path / "d.manifest.json").exists()

    def test_bad_grid(self, tmp_path):
        argv = ["star", "--out", str(tmp_path / "g"), "--preset", "gauss1", "--theta", "symplectic2", "--grid", "abc"]
        assert main(argv) == EXIT_VALIDATION

    def test_unknown_preset(self, tmp_path):
        argv = ["star", "--out", str(tmp_path / "u"), "--preset", "nope", "--theta", "symplectic2", "--grid", "32,8"]
        assert main(argv) == EXIT_VALIDATION


def test_bounds(tmp_path):
    prefix = tmp_path / "bounds"
    argv = ["bounds", "--out", str(prefix), "--alpha", "1", "--beta", "1", "--samples", "100", "--kappa-max", "3"]
    assert main(argv) == EXIT_OK
    payload = json.loads(_file(prefix, ".json").read_text())
    assert payload["C_eps"] >= 1.0
    assert payload["revalidation"]["violations"] == 0
    assert payload["revalidation"]["seed"] == 1
    assert _manifest(prefix)["seed"] == 0


def test_witness(tmp_path):
    prefix = tmp_path / "witness"
    assert main(["witness", "--out", str(prefix), "--beta", "2", "--nlist", "2,4", "--nodes", "2001"]) == EXIT_OK
    assert _manifest(prefix)["summary"]["passed"] is True
    assert len(_file(prefix, ".csv").read_text().splitlines()) == 3


def test_witness_failure_is_an_invariant_breach(tmp_path, monkeypatch):
    real = witness_command.witness_report

    def failing(*args, **kwargs):
        return real(*args, **kwargs).copy(update={"min_log_margin": -1.0})

    monkeypatch.setattr(witness_command, "witness_report", failing)
    prefix = tmp_path / "witness"
    assert main(["witness", "--out", str(prefix), "--beta", "2", "--nlist", "2", "--nodes", "2001"]) == EXIT_INVARIANT
    assert json.loads(_file(prefix, ".json").read_text())["min_log_margin"] == -1.0
    assert not (tmp_path / "witness.manifest.json").exists()


def test_continuity(tmp_path):
    prefix = tmp_path / "cont"
    argv = ["continuity", "--out", str(prefix), "--thetas", "1e-1,1e-2", "--grid", "64,8"]
    assert main(argv) == EXIT_OK
    assert _manifest(prefix)["summary"]["slope"] >= 0.9


def test_series(tmp_path):
    prefix = tmp_path / "series"
    argv = ["series", "--out", str(prefix), "--family", "bump", "--nmax", "4", "--grid", "64,10"]
    assert main(argv) == EXIT_OK
    summary = _manifest(prefix)["summary"]
    assert "verdict" in summary
    assert summary["all_within_bound"] is True
    assert len(_file(prefix, ".csv").read_text().splitlines()) == 6
