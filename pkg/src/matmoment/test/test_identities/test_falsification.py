# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

import pytest

import matmoment.api as MM
from matmoment import identities as ID
from matmoment.cli import perturbed_data


def _any_failed(reports):
    return any(not r.passed for r in reports)


def test_toeplitz_chain_rejects_unstructured(unstructured):
    for seed in range(50):
        data = unstructured(1 + seed % 2, 1 + seed % 3, seed, MM.Geometry.DISC)
        assert _any_failed(ID.check_toeplitz_chain(data, count=5, seed=seed)), seed
        assert not ID.check_isometry_criterion(data.gram, data.kind).passed


def test_hankel_chain_rejects_unstructured(unstructured):
    for seed in range(50):
        data = unstructured(1 + seed % 2, 1 + seed % 3, seed, MM.Geometry.HALF_PLANE)
        assert _any_failed(ID.check_hankel_chain(data, count=5, seed=seed)), seed


def _wrong_kind(gram, geometry):
    # drop the kind tag so the data can be placed on the other geometry
    return MM.DeBrangesData.from_gram(MM.gram_from_matrix(gram.G, gram.dims), geometry)


def test_chains_reject_the_other_structure():
    toeplitz = MM.build_gram(MM.random_toeplitz_moments(2, 2, seed=1))
    hankel = MM.build_gram(MM.random_hankel_moments(2, 2, seed=1))
    as_half = _wrong_kind(toeplitz, MM.Geometry.HALF_PLANE)
    as_disc = _wrong_kind(hankel, MM.Geometry.DISC)
    assert _any_failed(ID.check_hankel_chain(as_half))
    assert _any_failed(ID.check_toeplitz_chain(as_disc))


def test_structure_checks_reject_the_other_kind():
    toeplitz = MM.build_gram(MM.random_toeplitz_moments(2, 2, seed=1))
    hankel = MM.build_gram(MM.random_hankel_moments(2, 2, seed=1))
    as_half = _wrong_kind(toeplitz, MM.Geometry.HALF_PLANE)
    as_disc = _wrong_kind(hankel, MM.Geometry.DISC)
    assert not ID.check_displacement(as_half).passed
    assert not ID.check_hankel_gh_type(as_half).passed
    assert not ID.check_displacement(as_disc).passed
    assert not ID.check_gohberg_heinig(as_disc).passed


@pytest.mark.parametrize("kind", list(MM.MomentKind))
def test_suite_fails_on_perturbed_gram(kind):
    if kind is MM.MomentKind.TRIGONOMETRIC:
        moments = MM.random_toeplitz_moments(2, 2, seed=3)
    else:
        moments = MM.random_hankel_moments(2, 2, seed=3)
    data = MM.DeBrangesData.from_moments(moments)
    for seed in range(10):
        reports = MM.run_identity_suite(perturbed_data(data, 1e-3, seed), seed=seed, structure_only=True)
        failed = {r.name for r in reports if not r.passed}
        assert failed
        assert "displacement_" + kind.value in failed
        if kind is MM.MomentKind.TRIGONOMETRIC:
            assert "gohberg_heinig" in failed
        else:
            assert "hankel_gh_type" in failed
