# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

import numpy as np
import pytest

import matmoment.api as MM
from matmoment.debranges import density, lower_toeplitz, reflected_inverse, two_column_vectors
from matmoment.math_utils import hermitian_inv_sqrt
from matmoment.numerics import fourier_coeffs, line_integral


def test_data_vectors(trig_data):
    data = trig_data
    G, Gamma = data.G, data.Gamma
    for j, u in enumerate(data.u):
        # u_j* G u_j = I
        np.testing.assert_allclose(u.conj().T @ G @ u, np.eye(data.p), atol=1e-10)
        np.testing.assert_allclose(G @ u, data.e(j) @ hermitian_inv_sqrt(data.gram.gamma(j, j)), atol=1e-10)
    np.testing.assert_allclose(data.N0, Gamma - data.u[0] @ data.u[0].conj().T, atol=1e-12)
    assert data.kind is MM.MomentKind.TRIGONOMETRIC
    assert data.is_toeplitz()
    assert not data.is_hankel()
    assert data.default_alpha == 0.5


def test_from_gram_consistency(trivial_trig):
    gram = MM.build_gram(trivial_trig)
    with pytest.raises(MM.InconsistentInputsError):
        MM.DeBrangesData.from_gram(gram, MM.Geometry.HALF_PLANE)
    bare = MM.gram_from_matrix(np.eye(2), MM.ProblemDims(1, 1))
    with pytest.raises(MM.InconsistentInputsError):
        MM.DeBrangesData.from_gram(bare)
    data = MM.DeBrangesData.from_gram(bare, MM.Geometry.HALF_PLANE, alpha=2j)
    assert data.default_alpha == 2j


def test_trivial_trig_pair(trivial_trig_data):
    pair = MM.toeplitz_pair(trivial_trig_data)
    assert pair.eplus.allclose(MM.MatrixPolynomial.identity(1))
    assert pair.eminus.allclose(MM.MatrixPolynomial.monomial(2, np.eye(1)))
    eminus_o, eplus_o = MM.second_kind(trivial_trig_data, pair)
    assert eplus_o.allclose(MM.MatrixPolynomial.identity(1))
    assert eminus_o.allclose(MM.MatrixPolynomial.monomial(2, -np.eye(1)))
    pts = MM.Geometry.DISC.boundary_points(8)
    np.testing.assert_allclose(density(pair, pts)[:, 0, 0], 1.0, atol=1e-14)
    np.testing.assert_allclose(MM.phi_E(trivial_trig_data, pair, [0.0, 0.3])[:, 0, 0], 1.0, atol=1e-14)


def test_trivial_hamburger_pair(trivial_hamburger_data):
    data = trivial_hamburger_data
    pair = MM.hankel_pair(data)
    c = np.sqrt(np.pi / 2)
    x = np.array([0.3, -1.2 + 0.4j, 2j])
    np.testing.assert_allclose(pair.eplus(x)[:, 0, 0], -c * (x + 1j) ** 2, atol=1e-12)
    np.testing.assert_allclose(pair.eminus(x)[:, 0, 0], c * (x - 1j) ** 2, atol=1e-12)
    mu = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(density(pair, mu)[:, 0, 0], (2 / np.pi) / (1 + mu**2) ** 2, atol=1e-12)
    w = np.array([1j, 0.5 + 0.5j])
    expected = -(2 - 1j * w) / (np.pi * (w + 1j) ** 2)
    np.testing.assert_allclose(MM.phi_E(data, pair, w)[:, 0, 0], expected, atol=1e-12)
    assert MM.phi_E(data, pair, 1j)[0, 0] == pytest.approx(3 / (4 * np.pi))


def test_trivial_two_column_hankel(trivial_hamburger_data):
    data = trivial_hamburger_data
    pair = MM.hankel_two_column_pair(data)
    x = np.array([0.2, 1 + 1j])
    np.testing.assert_allclose(pair.eplus(x)[:, 0, 0], np.sqrt(np.pi) * (x**2 + 1j * x - 1), atol=1e-12)
    mu = np.linspace(-2, 2, 9)
    np.testing.assert_allclose(
        density(pair, mu)[:, 0, 0], 1 / (np.pi * (mu**4 - mu**2 + 1)), atol=1e-12
    )
    w = np.array([1j, -0.5 + 2j])
    np.testing.assert_allclose(
        MM.phi_E(data, pair, w)[:, 0, 0], (1j * w - 1) / (np.pi * (w**2 + 1j * w - 1)), atol=1e-12
    )


def test_pairs_share_the_kernel(hamburger_data):
    data = hamburger_data
    rng = np.random.default_rng(1)
    lam = MM.Geometry.HALF_PLANE.interior_points(5, rng)
    om = MM.Geometry.HALF_PLANE.interior_points(5, rng)
    expected = data.kernel(om, lam)
    for pair in (MM.hankel_pair(data), MM.hankel_pair(data, 0.5 + 2j), MM.hankel_two_column_pair(data)):
        np.testing.assert_allclose(pair.kernel(om, lam), expected, rtol=1e-8, atol=1e-10)


def test_toeplitz_alpha_pair_kernel(trig_data):
    data = trig_data
    rng = np.random.default_rng(2)
    lam = MM.Geometry.DISC.interior_points(5, rng)
    om = MM.Geometry.DISC.interior_points(5, rng)
    expected = data.kernel(om, lam)
    for pair in (MM.toeplitz_pair(data), MM.toeplitz_pair_alpha(data), MM.toeplitz_pair_alpha(data, -0.3j)):
        np.testing.assert_allclose(pair.kernel(om, lam), expected, rtol=1e-8, atol=1e-10)


def test_alpha_validation(trig_data, hamburger_data):
    with pytest.raises(MM.AlphaOutOfRegionError):
        MM.toeplitz_pair_alpha(trig_data, 0.0)
    with pytest.raises(MM.AlphaOutOfRegionError):
        MM.toeplitz_pair_alpha(trig_data, 1.2)
    with pytest.raises(MM.AlphaOutOfRegionError):
        MM.hankel_pair(hamburger_data, 0.5)
    with pytest.raises(MM.KindMismatchError):
        MM.hankel_pair(trig_data)
    with pytest.raises(MM.KindMismatchError):
        MM.toeplitz_pair(hamburger_data)


def test_structure_preconditions():
    dims = MM.ProblemDims(2, 2)
    gram = MM.random_unstructured_gram(dims, seed=5)
    with pytest.raises(MM.NotToeplitzError):
        MM.toeplitz_pair(MM.DeBrangesData.from_gram(gram, MM.Geometry.DISC))
    with pytest.raises(MM.NotHankelError):
        MM.hankel_pair(MM.DeBrangesData.from_gram(gram, MM.Geometry.HALF_PLANE))


def test_degenerate_order():
    moments = MM.MatrixMoments(MM.MomentKind.HAMBURGER, MM.ProblemDims(1, 0), np.ones((1, 1, 1)))
    data = MM.DeBrangesData.from_moments(moments)
    with pytest.raises(MM.DegenerateProblemError):
        MM.hankel_pair(data)
    with pytest.raises(MM.DegenerateProblemError):
        two_column_vectors(data)


def test_trig_density_recovers_moments(trig_data):
    data = trig_data
    pair = MM.toeplitz_pair(data)
    res = fourier_coeffs(lambda z: density(pair, z), range(data.n + 1))
    for k in range(data.n + 1):
        np.testing.assert_allclose(res.value[k], data.gram.moments.h(k), atol=1e-8)


@pytest.mark.parametrize("which", ["alpha", "two_column"])
def test_hamburger_density_recovers_moments(hamburger_data, which):
    data = hamburger_data
    pair = MM.hankel_pair(data) if which == "alpha" else MM.hankel_two_column_pair(data)
    powers = np.arange(2 * data.n + 1)

    def integrand(mu):
        return (mu[:, None] ** powers[None, :])[..., None, None] * density(pair, mu)[:, None]

    res = line_integral(integrand)
    for k in powers:
        np.testing.assert_allclose(res.value[k], data.gram.moments.h(k), atol=1e-6)


def test_phi_matches_quadrature(trig_data, hamburger_data):
    for data, pair, w in (
        (trig_data, MM.toeplitz_pair(trig_data), 0.3 - 0.2j),
        (hamburger_data, MM.hankel_pair(hamburger_data), 0.4 + 1.3j),
        (hamburger_data, MM.hankel_two_column_pair(hamburger_data), -0.7 + 0.8j),
    ):
        direct = MM.phi_E(data, pair, w)
        integral = MM.phi_E_quadrature(pair, w).value
        np.testing.assert_allclose(direct, integral, atol=1e-8)


def test_phi_errors(trig_data, hamburger_data):
    with pytest.raises(MM.OutOfRegionError):
        MM.phi_E(trig_data, MM.toeplitz_pair(trig_data), 1.0)
    with pytest.raises(MM.InconsistentInputsError):
        MM.phi_E(trig_data, MM.hankel_pair(hamburger_data), 0.1)
    with pytest.raises(MM.KindMismatchError):
        MM.second_kind(trig_data, MM.toeplitz_pair_alpha(trig_data))


def test_second_kind_relations(trig_data):
    data = trig_data
    pair = MM.toeplitz_pair(data)
    eminus_o, eplus_o = MM.second_kind(data, pair)
    for w in (0.2 + 0.1j, -0.5j):
        phi = MM.phi_E(data, pair, w)
        np.testing.assert_allclose(eplus_o(w), phi @ pair.eplus(w), atol=1e-9)
        np.testing.assert_allclose(
            eminus_o(w), phi @ pair.eminus(w) - 2 * reflected_inverse(pair, w), atol=1e-9
        )


def test_lower_toeplitz(trig_data):
    L = lower_toeplitz(trig_data)
    G = trig_data.G
    np.testing.assert_allclose(L + L.conj().T, 2 * G, atol=1e-12)


def test_chi_is_contractive(hamburger_data):
    pair = MM.hankel_pair(hamburger_data)
    rng = np.random.default_rng(3)
    pts = MM.Geometry.HALF_PLANE.interior_points(10, rng)
    norms = np.linalg.norm(pair.chi(pts), 2, axis=(-2, -1))
    assert np.all(norms < 1.0)
    edge = np.linspace(-2, 2, 5)
    chi = pair.chi(edge)
    for c in chi:
        np.testing.assert_allclose(c @ c.conj().T, np.eye(pair.p), atol=1e-9)
