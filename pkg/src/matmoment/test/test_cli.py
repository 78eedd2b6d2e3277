# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

import csv
import json

import numpy as np
import pytest

import matmoment.api as MM
from matmoment.cli import RunConfig, grid_points, main
from matmoment.matpoly import block_from_json


def _read_density(path):
    with path.open() as f:
        rows = list(csv.reader(f))
    return rows[0], np.array(rows[1:], dtype=float)


def test_solve_trivial_trig(moment_file, tmp_path, capsys):
    out = tmp_path / "out"
    code = main(["solve", "--input", str(moment_file()), "--output", str(out), "--grid", "16"])
    assert code == 0
    header, values = _read_density(out / "density.csv")
    assert header == ["t", "re_00", "im_00"]
    assert len(values) == 16
    np.testing.assert_allclose(values[:, 1], 1.0, atol=1e-12)
    np.testing.assert_allclose(values[:, 2], 0.0, atol=1e-12)

    solution = json.loads((out / "solution.json").read_text())
    assert solution["kind"] == "trigonometric"
    assert solution["construction"] == "toeplitz_two_column"
    assert max(solution["moment_residuals"]) <= solution["moment_tolerance"]
    assert "chi_infinity" not in solution
    assert "residual" in capsys.readouterr().out


def test_solve_trivial_hamburger(moment_file, trivial_hamburger, tmp_path):
    out = tmp_path / "out"
    path = moment_file(trivial_hamburger)
    assert main(["solve", "--input", str(path), "--output", str(out), "--grid", "32"]) == 0
    header, values = _read_density(out / "density.csv")
    assert header[0] == "mu"
    mu = values[:, 0]
    np.testing.assert_allclose(values[:, 1], (2 / np.pi) / (1 + mu**2) ** 2, atol=1e-12)
    solution = json.loads((out / "solution.json").read_text())
    assert solution["alpha"] == [0.0, 1.0]
    np.testing.assert_allclose(block_from_json(solution["chi_infinity"]), [[-1.0]], atol=1e-12)


def test_input_errors(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert main(["solve", "--input", str(broken), "--output", str(tmp_path)]) == 1
    assert "matmoment: error:" in capsys.readouterr().err

    assert main(["bogus"]) == 1
    assert main(["solve"]) == 1
    assert main(["solve", "--input", str(broken), "--alpha", "not-a-number"]) == 1
    assert main(["sample-solutions", "--input", str(broken), "--schur", "{bad"]) == 1


def test_not_positive_definite(moment_file, tmp_path, capsys):
    moments = MM.MatrixMoments(
        MM.MomentKind.TRIGONOMETRIC, MM.ProblemDims(1, 1), np.array([[[1.0]], [[2.0]]])
    )
    path = moment_file(moments)
    assert main(["solve", "--input", str(path), "--output", str(tmp_path)]) == 2
    assert "not positive definite" in capsys.readouterr().err


def test_verify(moment_file, tmp_path):
    path = moment_file(MM.random_toeplitz_moments(2, 2, seed=5))
    out = tmp_path / "clean"
    assert main(["verify", "--input", str(path), "--output", str(out)]) == 0
    report = json.loads((out / "verify.json").read_text())
    assert report["passed"]
    assert report["failed"] == []
    names = {r["name"] for r in report["reports"]}
    assert {"toeplitz_chain_row", "gohberg_heinig", "theta_J_identity"} <= names


def test_verify_perturbed(moment_file, tmp_path, capsys):
    path = moment_file(MM.random_toeplitz_moments(2, 2, seed=5))
    out = tmp_path / "perturbed"
    assert main(["verify", "--input", str(path), "--output", str(out), "--perturb"]) == 4
    report = json.loads((out / "verify.json").read_text())
    assert not report["passed"]
    assert report["perturb"] == pytest.approx(1e-3)
    assert "isometry_toeplitz" in report["failed"]
    assert set(report["failed"]) <= {r["name"] for r in report["reports"]}
    assert "isometry_toeplitz" in capsys.readouterr().err


def test_verify_hamburger(moment_file, tmp_path):
    path = moment_file(MM.random_hankel_moments(1, 2, seed=5))
    assert main(["verify", "--input", str(path), "--output", str(tmp_path)]) == 0
    names = {r["name"] for r in json.loads((tmp_path / "verify.json").read_text())["reports"]}
    assert {"hankel_chain_kernel", "hamburger_q_idempotent", "isometry_hankel"} <= names


def test_random_instance_is_reproducible(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    for out in (first, second):
        args = ["random-instance", "--kind", "hamburger", "--p", "2", "--n", "3", "--seed", "9"]
        assert main(args + ["--output", str(out)]) == 0
    a = (first / "moments.json").read_bytes()
    assert a == (second / "moments.json").read_bytes()
    moments = MM.MatrixMoments.load(first / "moments.json")
    assert moments.kind is MM.MomentKind.HAMBURGER
    assert moments.blocks.shape == (7, 2, 2)


def test_sample_solutions(moment_file, tmp_path):
    out = tmp_path / "samples"
    assert main(["sample-solutions", "--input", str(moment_file()), "--output", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    entries = summary["solutions"]
    assert len(entries) == 3
    assert all(e["moments_match"] for e in entries)
    assert all(e["caratheodory_min_eigenvalue"] >= -1e-10 for e in entries)
    # h_2 = -s for the constants +-0.5
    assert summary["non_uniqueness"] == pytest.approx(1.0, abs=1e-8)
    for i in range(3):
        assert (out / f"density_s{i}.csv").exists()


def test_sample_solutions_hamburger(moment_file, trivial_hamburger, tmp_path):
    path = moment_file(trivial_hamburger)
    schur = ['{"type": "zero"}', '{"type": "constant", "value": 0.5}']
    args = ["sample-solutions", "--input", str(path), "--output", str(tmp_path), "--grid", "16"]
    for spec in schur:
        args += ["--schur", spec]
    assert main(args) == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    assert [e["schur"]["type"] for e in summary["solutions"]] == ["zero", "constant"]
    assert all(e["moments_match"] for e in summary["solutions"])
    assert summary["non_uniqueness"] > 1e-3


def test_entropy(moment_file, tmp_path, capsys):
    path = moment_file(MM.random_toeplitz_moments(2, 1, seed=2))
    assert main(["entropy", "--input", str(path), "--output", str(tmp_path), "--omega", "0.3"]) == 0
    reports = json.loads((tmp_path / "entropy.json").read_text())["reports"]
    assert [r["schur"]["type"] for r in reports] == ["zero", "extremal"]
    assert all(r["gap"] >= -1e-7 for r in reports)
    assert reports[1]["equality_case"]
    assert reports[1]["gap"] == pytest.approx(0.0, abs=1e-6)
    assert capsys.readouterr().out.count("gap") == 2


def test_run_config_defaults():
    cfg = RunConfig("solve")
    assert cfg.moment_tolerance(MM.MomentKind.TRIGONOMETRIC) == 1e-8
    assert cfg.moment_tolerance(MM.MomentKind.HAMBURGER) == 1e-6
    assert cfg.evaluation_point(MM.Geometry.HALF_PLANE) == 1j
    assert RunConfig("solve", tol_moment=1e-3).moment_tolerance(MM.MomentKind.HAMBURGER) == 1e-3


def test_grid_points():
    t, z = grid_points(MM.Geometry.DISC, 4)
    np.testing.assert_allclose(t, [0, np.pi / 2, np.pi, 3 * np.pi / 2])
    np.testing.assert_allclose(z, [1, 1j, -1, -1j], atol=1e-15)
    mu, x = grid_points(MM.Geometry.HALF_PLANE, 4)
    assert np.all(np.diff(mu) > 0)
    np.testing.assert_allclose(mu, -mu[::-1], atol=1e-12)
    np.testing.assert_allclose(x.imag, 0.0)
