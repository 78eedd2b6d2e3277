# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

import json

import numpy as np
import pytest

import matmoment.api as MM

DIMS = [(1, 1), (2, 2), (2, 3)]


@pytest.fixture
def trivial_trig() -> MM.MatrixMoments:
    return MM.MatrixMoments(
        MM.MomentKind.TRIGONOMETRIC, MM.ProblemDims(1, 1), np.array([[[1.0]], [[0.0]]])
    )


@pytest.fixture
def trivial_hamburger() -> MM.MatrixMoments:
    return MM.MatrixMoments(
        MM.MomentKind.HAMBURGER, MM.ProblemDims(1, 1), np.array([[[1.0]], [[0.0]], [[1.0]]])
    )


@pytest.fixture
def trivial_trig_data(trivial_trig: MM.MatrixMoments) -> MM.DeBrangesData:
    return MM.DeBrangesData.from_moments(trivial_trig)


@pytest.fixture
def trivial_hamburger_data(trivial_hamburger: MM.MatrixMoments) -> MM.DeBrangesData:
    return MM.DeBrangesData.from_moments(trivial_hamburger)


@pytest.fixture(params=DIMS, ids=lambda d: f"p{d[0]}n{d[1]}")
def trig_data(request: pytest.FixtureRequest) -> MM.DeBrangesData:
    p, n = request.param
    return MM.DeBrangesData.from_moments(MM.random_toeplitz_moments(p, n, seed=10 * p + n))


@pytest.fixture(params=DIMS, ids=lambda d: f"p{d[0]}n{d[1]}")
def hamburger_data(request: pytest.FixtureRequest) -> MM.DeBrangesData:
    p, n = request.param
    return MM.DeBrangesData.from_moments(MM.random_hankel_moments(p, n, seed=10 * p + n))


@pytest.fixture
def moment_file(tmp_path, trivial_trig):
    def _write(moments: MM.MatrixMoments | None = None, name: str = "moments.json"):
        path = tmp_path / name
        path.write_text(json.dumps((moments or trivial_trig).to_json()))
        return path

    return _write
