# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

import warnings

import numpy as np
import pytest

import matmoment.api as MM
from matmoment.constants import ENTROPY_EQUALITY_TOL, ENTROPY_TOL
from matmoment.solutions import (
    SchurRepresentation,
    caratheodory_margin,
    check_restricted_class,
    density_sup_distance,
    radial_density,
    taylor_coefficients,
)

DISC = MM.Geometry.DISC
HALF = MM.Geometry.HALF_PLANE


def _solution(data, S=None):
    pair = MM.default_pair(data)
    theta = MM.assemble_theta(data, pair)
    S = MM.SchurParameter.zero(data.p, data.geometry) if S is None else S
    return MM.SolutionFunction(theta, S)


def test_signature_matrices():
    J, j = MM.signature_matrices(2)
    assert J.shape == j.shape == (4, 4)
    np.testing.assert_allclose(J @ J, np.eye(4))
    np.testing.assert_allclose(j @ j, np.eye(4))
    np.testing.assert_allclose(J[:2, 2:], -np.eye(2))
    np.testing.assert_allclose(np.diag(j), [1, 1, -1, -1])


def test_trivial_theta(trivial_trig_data):
    pair = MM.toeplitz_pair(trivial_trig_data)
    theta = MM.assemble_theta(trivial_trig_data, pair)
    x = np.array([0.3, -0.2 + 0.6j, 1j])
    r = 1 / np.sqrt(2)
    T = theta(x)
    assert T.shape == (3, 2, 2)
    np.testing.assert_allclose(T[:, 0, 0], -r * x**2, atol=1e-14)
    np.testing.assert_allclose(T[:, 0, 1], r, atol=1e-14)
    np.testing.assert_allclose(T[:, 1, 0], r * x**2, atol=1e-14)
    np.testing.assert_allclose(T[:, 1, 1], r, atol=1e-14)
    assert theta.construction is MM.Construction.TOEPLITZ_TWO_COLUMN
    assert theta.to_json()["geometry"] == "disc"


def test_theta_is_j_unitary_on_boundary(trig_data, hamburger_data):
    for data in (trig_data, hamburger_data):
        theta = MM.assemble_theta(data, MM.default_pair(data))
        J, j = MM.signature_matrices(data.p)
        for t in theta(data.geometry.boundary_points(12)):
            np.testing.assert_allclose(t @ j @ t.conj().T, J, atol=1e-8)


def test_assemble_theta_mismatch(trig_data, hamburger_data):
    with pytest.raises(MM.InconsistentInputsError):
        MM.assemble_theta(trig_data, MM.hankel_pair(hamburger_data))


def test_trivial_chi_infinity(trivial_hamburger_data):
    pair = MM.hankel_pair(trivial_hamburger_data)
    theta = MM.assemble_theta(trivial_hamburger_data, pair)
    np.testing.assert_allclose(theta.chi_infinity(), [[-1.0]], atol=1e-12)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        chi, chi_inf = MM.chi_and_chi_infinity(pair)
    np.testing.assert_allclose(chi_inf, [[-1.0]], atol=1e-12)
    assert chi(1j)[0, 0] == pytest.approx(0.0)

    two = MM.hankel_two_column_pair(trivial_hamburger_data)
    _, chi_inf2 = MM.chi_and_chi_infinity(two)
    np.testing.assert_allclose(chi_inf2, [[1.0]], atol=1e-12)


def test_chi_infinity_needs_half_plane(trivial_trig_data):
    with pytest.raises(MM.KindMismatchError):
        MM.chi_and_chi_infinity(MM.toeplitz_pair(trivial_trig_data))


def test_schur_constructors():
    zero = MM.SchurParameter.zero(2, DISC)
    assert zero.is_constant
    assert zero(np.array([0.1, 0.2])).shape == (2, 2, 2)

    S = MM.SchurParameter.from_constant([[0.5, 0], [0, -0.25j]], HALF)
    assert S.max_norm() == pytest.approx(0.5)
    with pytest.raises(MM.NotContractiveError):
        MM.SchurParameter.from_constant(2 * np.eye(2), DISC)
    with pytest.raises(MM.InputError):
        MM.SchurParameter.from_constant(np.ones((2, 3)), DISC)

    B = MM.SchurParameter.blaschke_unitary(0.5, np.eye(1), DISC)
    assert abs(B(0.5)[0, 0]) == pytest.approx(0.0)
    assert B.max_norm() <= 1.0 + 1e-12
    with pytest.raises(MM.NotContractiveError):
        MM.SchurParameter.blaschke_unitary(0.5, [[0.5]], DISC)

    prod = MM.SchurParameter.product([S, S])
    np.testing.assert_allclose(prod.constant, S.constant @ S.constant)
    with pytest.raises(MM.InputError):
        MM.SchurParameter.product([])
    with pytest.raises(MM.InconsistentInputsError):
        MM.SchurParameter.product([S, zero])


def test_sample_schur_specs():
    S = MM.sample_schur({"type": "constant", "sigma_max": 0.9}, 3, DISC, seed=4)
    assert S.max_norm() == pytest.approx(0.9)
    again = MM.sample_schur({"type": "constant", "sigma_max": 0.9}, 3, DISC, seed=4)
    np.testing.assert_array_equal(S.constant, again.constant)

    value = MM.sample_schur({"type": "constant", "value": [0, 0.5]}, 2, HALF)
    np.testing.assert_allclose(value.constant, 0.5j * np.eye(2))

    B = MM.sample_schur({"type": "blaschke_unitary", "alpha": [0, 2]}, 2, HALF, seed=1)
    assert B.alpha == 2j
    assert B.representation is SchurRepresentation.BLASCHKE_UNITARY

    prod = MM.sample_schur(
        {"type": "product", "factors": [{"type": "zero"}, {"type": "constant", "value": 0.3}]},
        1, DISC,
    )
    assert len(prod.factors) == 2
    assert prod.max_norm() == pytest.approx(0.0)

    with pytest.raises(MM.InputError):
        MM.sample_schur({"type": "rational"}, 1, DISC)
    with pytest.raises(MM.InputError):
        MM.sample_schur({"value": 0.3}, 1, DISC)
    with pytest.raises(MM.NotContractiveError):
        MM.sample_schur({"type": "constant", "sigma_max": 1.5}, 1, DISC)


def test_solution_function_checks(trivial_trig_data):
    theta = MM.assemble_theta(trivial_trig_data, MM.toeplitz_pair(trivial_trig_data))
    with pytest.raises(MM.InconsistentInputsError):
        MM.SolutionFunction(theta, MM.SchurParameter.zero(1, HALF))
    with pytest.raises(MM.InconsistentInputsError):
        MM.SolutionFunction(theta, MM.SchurParameter.zero(2, DISC))
    solution = MM.SolutionFunction(theta, MM.SchurParameter.zero(1, DISC))
    with pytest.raises(MM.OutOfRegionError):
        solution(1.5)
    with pytest.raises(MM.OutOfRegionError):
        solution.density([0.5])


def test_zero_parameter_gives_phi_e(trig_data, hamburger_data):
    rng = np.random.default_rng(8)
    for data in (trig_data, hamburger_data):
        pair = MM.default_pair(data)
        solution = _solution(data)
        w = data.geometry.interior_points(10, rng)
        np.testing.assert_allclose(solution(w), MM.phi_E(data, pair, w), atol=1e-9)
        np.testing.assert_allclose(
            MM.lft_eval(solution.theta, solution.schur, w), solution(w), atol=1e-14
        )


def test_zero_parameter_density_is_delta_e(trig_data):
    pair = MM.toeplitz_pair(trig_data)
    pts = DISC.boundary_points(16)
    np.testing.assert_allclose(_solution(trig_data).density(pts), pair.density(pts), atol=1e-9)


def test_boundary_density_matches_radial_limit(trig_data, hamburger_data):
    for data in (trig_data, hamburger_data):
        S = MM.sample_schur({"type": "constant", "sigma_max": 0.6}, data.p, data.geometry, seed=2)
        solution = _solution(data, S)
        pts = data.geometry.boundary_points(16)
        np.testing.assert_allclose(
            MM.boundary_density(solution, pts), radial_density(solution, pts), atol=1e-7
        )


def test_trivial_trig_free_moment(trivial_trig_data):
    # Delta_S = (1 - s^2) / |1 + s z^2|^2 has h_2 = -s
    for s in (0.5, -0.5):
        S = MM.SchurParameter.from_constant([[s]], DISC)
        solution = _solution(trivial_trig_data, S)
        h = MM.recover_trig_moments(solution, count=3)
        np.testing.assert_allclose(h[:, 0, 0], [1.0, 0.0, -s], atol=1e-10)
        c = taylor_coefficients(solution, 3)
        np.testing.assert_allclose(c[:, 0, 0], [1.0, 0.0, -2 * s], atol=1e-10)


RANDOM_TRIG_SCHUR = [
    {"type": "constant", "sigma_max": 0.9},
    {"type": "constant", "sigma_max": 0.5},
    {"type": "constant", "sigma_max": 0.95},
    {
        "type": "product",
        "factors": [{"type": "constant", "sigma_max": 0.7}, {"type": "blaschke_unitary", "alpha": [0.3, 0.2]}],
    },
    {
        "type": "product",
        "factors": [{"type": "blaschke_unitary", "alpha": [-0.5, 0.0]}, {"type": "constant", "sigma_max": 0.8}],
    },
]


def test_trig_solutions_share_moments(trig_data):
    for seed, spec in enumerate(RANDOM_TRIG_SCHUR):
        S = MM.sample_schur(spec, trig_data.p, DISC, seed=seed)
        h = MM.recover_trig_moments(_solution(trig_data, S))
        for k in range(trig_data.n + 1):
            np.testing.assert_allclose(h[k], trig_data.gram.moments.h(k), atol=1e-8)


def test_trig_first_free_moment_depends_on_S(trig_data):
    tails = []
    for value in (0.5, -0.5):
        S = MM.sample_schur({"type": "constant", "value": value}, trig_data.p, DISC)
        tails.append(MM.recover_trig_moments(_solution(trig_data, S), count=trig_data.n + 2)[-1])
    assert np.linalg.norm(tails[0] - tails[1], 2) > 1e-6


def test_solutions_are_not_unique(trig_data, hamburger_data):
    for data in (trig_data, hamburger_data):
        first = _solution(data, MM.SchurParameter.from_constant(0.5 * np.eye(data.p), data.geometry))
        second = _solution(data, MM.SchurParameter.from_constant(-0.5 * np.eye(data.p), data.geometry))
        if data.geometry is DISC:
            a, b = MM.recover_trig_moments(first), MM.recover_trig_moments(second)
        else:
            a, b = MM.recover_hamburger_moments(first), MM.recover_hamburger_moments(second)
        np.testing.assert_allclose(a, b, atol=2e-6)
        pts = data.geometry.boundary_points(64)
        assert density_sup_distance(first, second, pts) >= 1e-3


def test_taylor_coefficients(trig_data):
    S = MM.sample_schur({"type": "constant", "sigma_max": 0.8}, trig_data.p, DISC, seed=6)
    c = taylor_coefficients(_solution(trig_data, S), trig_data.n + 1)
    moments = trig_data.gram.moments
    np.testing.assert_allclose(c[0], moments.h(0), atol=1e-9)
    for k in range(1, trig_data.n + 1):
        np.testing.assert_allclose(c[k], 2 * moments.h(k), atol=1e-9)


def test_hamburger_solutions_share_moments(hamburger_data):
    for seed, sigma in enumerate((0.3, 0.5, 0.7, 0.9, 0.95)):
        S = MM.sample_schur({"type": "constant", "sigma_max": sigma}, hamburger_data.p, HALF, seed=seed)
        h = MM.recover_hamburger_moments(_solution(hamburger_data, S))
        assert len(h) == 2 * hamburger_data.n + 1
        for k in range(len(h)):
            np.testing.assert_allclose(h[k], hamburger_data.gram.moments.h(k), atol=1e-6)


def test_inner_parameters_are_rejected(trivial_trig_data, trivial_hamburger_data):
    inner = MM.SchurParameter.blaschke_unitary(0.5, [[1.0]], DISC)
    with pytest.raises(MM.SingularMeasureError):
        MM.recover_trig_moments(_solution(trivial_trig_data, inner))
    with pytest.raises(MM.SingularMeasureError):
        MM.recover_trig_moments(_solution(trivial_trig_data, MM.SchurParameter.from_constant([[1.0]], DISC)))

    # chi_inf = -1, so U = i keeps S in the restricted class
    inner = MM.SchurParameter.blaschke_unitary(2j, [[1j]], HALF)
    with pytest.raises(MM.SingularMeasureError):
        MM.recover_hamburger_moments(_solution(trivial_hamburger_data, inner))


def test_trivial_hamburger_constant(trivial_hamburger_data):
    S = MM.SchurParameter.from_constant([[0.5]], HALF)
    h = MM.recover_hamburger_moments(_solution(trivial_hamburger_data, S))
    np.testing.assert_allclose(h[:, 0, 0], [1.0, 0.0, 1.0], atol=1e-6)

    with pytest.raises(MM.KindMismatchError):
        MM.recover_trig_moments(_solution(trivial_hamburger_data, S))


def test_restricted_class(trivial_hamburger_data):
    chi_inf = np.array([[-1.0]])
    inside = check_restricted_class(MM.SchurParameter.from_constant([[0.5]], HALF), chi_inf)
    assert inside.in_class
    assert inside.values[0] == pytest.approx(2e-2)
    assert inside.heights == (1e2, 1e3, 1e4)

    # S = -chi_inf* makes I + chi_inf S vanish
    edge = MM.SchurParameter.from_constant([[1.0]], HALF)
    outside = check_restricted_class(edge, chi_inf)
    assert not outside.in_class
    assert np.isinf(outside.values[0])
    with pytest.raises(MM.RestrictedClassError):
        MM.recover_hamburger_moments(_solution(trivial_hamburger_data, edge))

    with pytest.raises(MM.KindMismatchError):
        check_restricted_class(MM.SchurParameter.zero(1, DISC), chi_inf)


def test_trivial_entropy(trivial_trig_data, trivial_hamburger_data):
    data = trivial_trig_data
    pair = MM.toeplitz_pair(data)
    theta = MM.assemble_theta(data, pair)
    report = MM.entropy_check(data, pair, theta, MM.SchurParameter.zero(1, DISC), 0.0)
    assert report.lhs == pytest.approx(0.0, abs=1e-10)
    assert report.rhs == pytest.approx(0.0, abs=1e-12)
    assert report.equality_case

    half = MM.entropy_check(data, pair, theta, MM.SchurParameter.from_constant([[0.5]], DISC), 0.0)
    assert half.gap == pytest.approx(-np.log(0.75), abs=1e-9)
    assert not half.equality_case

    hdata = trivial_hamburger_data
    hpair = MM.hankel_pair(hdata)
    htheta = MM.assemble_theta(hdata, hpair)
    hreport = MM.entropy_check(hdata, hpair, htheta, MM.SchurParameter.zero(1, HALF), 1j)
    assert hreport.rhs == pytest.approx(-np.log(8 * np.pi), abs=1e-12)
    assert hreport.lhs == pytest.approx(-np.log(8 * np.pi), abs=1e-7)
    assert hreport.to_dict()["omega"] == [0.0, 1.0]


def test_entropy_inequality_random_parameters():
    data = MM.DeBrangesData.from_moments(MM.random_toeplitz_moments(2, 2, seed=21))
    pair = MM.toeplitz_pair(data)
    theta = MM.assemble_theta(data, pair)
    for seed in range(20):
        S = MM.sample_schur({"type": "constant", "sigma_max": 0.9}, 2, DISC, seed=seed)
        report = MM.entropy_check(data, pair, theta, S, 0.3)
        assert report.gap >= -ENTROPY_TOL


def _assert_equality_case(data, omega):
    pair = MM.default_pair(data)
    theta = MM.assemble_theta(data, pair)
    S = MM.SchurParameter.from_constant(-pair.chi(omega).conj().T, data.geometry)
    report = MM.entropy_check(data, pair, theta, S, omega)
    assert report.equality_case
    assert report.gap == pytest.approx(0.0, abs=ENTROPY_EQUALITY_TOL)


def test_entropy_equality_trig(trig_data):
    _assert_equality_case(trig_data, 0.3)


def test_entropy_equality_hamburger(hamburger_data):
    _assert_equality_case(hamburger_data, 1j)


def test_entropy_equality_hamburger_away_from_alpha(hamburger_data):
    # chi vanishes at alpha = i, so the extremal S is only nontrivial elsewhere
    assert np.linalg.norm(MM.hankel_pair(hamburger_data).chi(0.5 + 2j), 2) > 1e-3
    _assert_equality_case(hamburger_data, 0.5 + 2j)


def test_entropy_inequality_random_parameters_hamburger():
    data = MM.DeBrangesData.from_moments(MM.random_hankel_moments(2, 2, seed=21))
    pair = MM.hankel_pair(data)
    theta = MM.assemble_theta(data, pair)
    for seed in range(20):
        S = MM.sample_schur({"type": "constant", "sigma_max": 0.9}, 2, HALF, seed=seed)
        report = MM.entropy_check(data, pair, theta, S, 0.5 + 2j)
        assert report.gap >= -ENTROPY_TOL
        assert not report.equality_case


def test_equality_flag_needs_a_closed_gap(trig_data):
    pair = MM.toeplitz_pair(trig_data)
    theta = MM.assemble_theta(trig_data, pair)
    S = MM.SchurParameter.from_constant(-pair.chi(0.3).conj().T, DISC)
    coarse = MM.CircleQuadrature(nodes=2, tol=10.0, max_doublings=1)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = MM.entropy_check(trig_data, pair, theta, S, 0.3, circle=coarse)
    assert abs(report.gap) > ENTROPY_EQUALITY_TOL
    assert not report.equality_case


def test_caratheodory_margin(trig_data, hamburger_data):
    for data in (trig_data, hamburger_data):
        for seed in range(3):
            S = MM.sample_schur({"type": "constant", "sigma_max": 0.95}, data.p, data.geometry, seed)
            assert caratheodory_margin(_solution(data, S)) >= -1e-10


def test_density_sup_distance(trivial_trig_data):
    first = _solution(trivial_trig_data)
    second = _solution(trivial_trig_data, MM.SchurParameter.from_constant([[0.5]], DISC))
    pts = DISC.boundary_points(8)
    # largest gap at z^2 = -1: 0.75 / 0.25 - 1
    assert density_sup_distance(first, second, pts) == pytest.approx(2.0, abs=1e-10)
    assert density_sup_distance(first, first, pts) == 0.0


def _gap_sweep(data, omega):
    pair = MM.default_pair(data)
    theta = MM.assemble_theta(data, pair)
    target = -pair.chi(omega).conj().T
    reports = []
    for c in (0.0, 0.5, 1.0):
        S = MM.SchurParameter.from_constant(c * target, data.geometry)
        reports.append(MM.entropy_check(data, pair, theta, S, omega))
    gaps = [r.gap for r in reports]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] == pytest.approx(0.0, abs=ENTROPY_EQUALITY_TOL)
    assert [r.equality_case for r in reports] == [False, False, True]


def test_entropy_gap_shrinks_toward_extremal(trig_data):
    _gap_sweep(trig_data, 0.3)


def test_entropy_gap_shrinks_toward_extremal_hamburger(hamburger_data):
    _gap_sweep(hamburger_data, 0.5 + 2j)
