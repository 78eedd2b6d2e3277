# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

from collections.abc import Callable

import pytest

import matmoment.api as MM

UnstructuredFactory = Callable[[int, int, int, MM.Geometry], MM.DeBrangesData]


@pytest.fixture
def unstructured() -> UnstructuredFactory:
    def _make(p: int, n: int, seed: int, geometry: MM.Geometry) -> MM.DeBrangesData:
        gram = MM.random_unstructured_gram(MM.ProblemDims(p, n), seed)
        return MM.DeBrangesData.from_gram(gram, geometry)

    return _make

