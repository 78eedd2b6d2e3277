# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Block matrices: moments, Gram matrices, the shift A and the row F(x)."""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any
from warnings import warn

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from .base import (
    MomentFileError,
    NotHermitianError,
    NotPositiveDefiniteError,
    ShapeMismatchError,
)
from .constants import INVERSE_TOL, PIVOT_TOL, SYMMETRY_TOL
from .math_utils import CARRAY, adjoint, hermitianize
from .matpoly import Geometry, block_from_json, block_to_json

__all__ = (
    "MomentKind",
    "ProblemDims",
    "MatrixMoments",
    "ShiftStructure",
    "GramPair",
    "build_gram",
    "gram_from_matrix",
    "reverse_gram",
    "evaluate_F",
    "evaluate_Fhat",
    "toeplitz_residual",
    "hankel_residual",
    "random_toeplitz_moments",
    "random_hankel_moments",
    "random_unstructured_gram",
)

logger = logging.getLogger(__name__)


class MomentKind(Enum):
    """Which truncated moment problem the data belongs to."""

    TRIGONOMETRIC = "trigonometric"
    HAMBURGER = "hamburger"

    @property
    def geometry(self) -> Geometry:
        """Disc for trigonometric data, half-plane for Hamburger data."""
        if self is MomentKind.TRIGONOMETRIC:
            return Geometry.DISC
        return Geometry.HALF_PLANE

    def block_count(self, n: int) -> int:
        """Number of stored moment blocks for order n."""
        return n + 1 if self is MomentKind.TRIGONOMETRIC else 2 * n + 1


@dataclass(frozen=True)
class ProblemDims:
    """Block size p and moment order n, with total dimension m = (n + 1) p."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if int(self.p) != self.p or self.p < 1:
            raise ShapeMismatchError(f"Block size must be a positive integer, got {self.p}")
        if int(self.n) != self.n or self.n < 0:
            raise ShapeMismatchError(f"Moment order must be a nonnegative integer, got {self.n}")

    @property
    def m(self) -> int:
        """Total dimension (n + 1) p."""
        return (self.n + 1) * self.p


def _is_hermitian(block: CARRAY, tol: float) -> bool:
    scale = max(float(np.linalg.norm(block)), np.finfo(float).tiny)
    return float(np.linalg.norm(block - adjoint(block))) <= tol * scale


@dataclass(frozen=True, eq=False)
class MatrixMoments:
    """The given moment blocks.

    Trigonometric data stores h_0..h_n (h_{-k} = h_k*). Hamburger data stores
    h_0..h_{2n}, each Hermitian.
    """

    kind: MomentKind
    dims: ProblemDims
    blocks: CARRAY

    def __post_init__(self) -> None:
        arr = np.array(self.blocks, dtype=complex)
        p, n = self.dims.p, self.dims.n
        expected = (self.kind.block_count(n), p, p)
        if arr.shape != expected:
            raise ShapeMismatchError(
                f"{self.kind.value} moments with p={p}, n={n} need shape {expected}, got {arr.shape}"
            )
        check = range(len(arr)) if self.kind is MomentKind.HAMBURGER else (0,)
        for k in check:
            if not _is_hermitian(arr[k], SYMMETRY_TOL):
                raise NotHermitianError(f"Moment h_{k} is not Hermitian")
        arr[list(check)] = hermitianize(arr[list(check)])
        arr.setflags(write=False)
        object.__setattr__(self, "blocks", arr)

    def h(self, k: int) -> CARRAY:
        """The moment h_k, negative k allowed for trigonometric data."""
        if self.kind is MomentKind.TRIGONOMETRIC and k < 0:
            return adjoint(self.blocks[-k])
        if k < 0:
            raise ShapeMismatchError("Hamburger moments have nonnegative indices")
        return self.blocks[k]

    @classmethod
    def from_json(cls, data: Any) -> "MatrixMoments":
        """Build from the moment schema.

        Args:
            data (Any): {"kind", "p", "n", "moments": [block, ...]}

        Returns:
            MatrixMoments: The moments
        """
        if not isinstance(data, dict):
            raise MomentFileError("Moment data must be a JSON object")
        missing = {"kind", "p", "n", "moments"} - set(data)
        if missing:
            raise MomentFileError(f"Moment data is missing {sorted(missing)}")
        try:
            kind = MomentKind(data["kind"])
        except ValueError as exc:
            raise MomentFileError(f"Unknown moment kind {data['kind']!r}") from exc
        try:
            dims = ProblemDims(int(data["p"]), int(data["n"]))
        except (TypeError, ValueError) as exc:
            raise MomentFileError(f"Bad dimensions: {exc}") from exc
        if not isinstance(data["moments"], list):
            raise MomentFileError("'moments' must be a list of blocks")
        blocks = [block_from_json(b, dims.p) for b in data["moments"]]
        if not blocks:
            raise MomentFileError("'moments' is empty")
        return cls(kind, dims, np.stack(blocks))

    @classmethod
    def load(cls, path: str | Path) -> "MatrixMoments":
        """Read a moment JSON file."""
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise MomentFileError(f"Cannot read {path}: {exc}") from exc
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MomentFileError(
                f"Malformed JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from exc
        return cls.from_json(data)

    def to_json(self) -> dict[str, Any]:
        """The moment schema as a dictionary."""
        return {
            "kind": self.kind.value,
            "p": self.dims.p,
            "n": self.dims.n,
            "moments": [block_to_json(b) for b in self.blocks],
        }


@dataclass(frozen=True, eq=False)
class ShiftStructure:
    """The block upshift A and the block injections e_0..e_n.

    A e_{j+1} = e_j and A e_0 = 0, so A^(n+1) = 0.
    """

    dims: ProblemDims
    A: CARRAY = field(init=False, repr=False)
    injections: tuple[CARRAY, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        m, p = self.dims.m, self.dims.p
        A = np.eye(m, k=p, dtype=complex)
        A.setflags(write=False)
        eye = np.eye(m, dtype=complex)
        inj = tuple(eye[:, j * p : (j + 1) * p].copy() for j in range(self.dims.n + 1))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "injections", inj)

    def e(self, j: int) -> CARRAY:
        """Block injection e_j (m x p)."""
        return self.injections[j]

    def F(self, lam: ArrayLike) -> CARRAY:
        """Shortcut for ``evaluate_F``."""
        return evaluate_F(self, lam)


def evaluate_F(shift: ShiftStructure, lam: ArrayLike) -> CARRAY:
    """F(x) = [I, x I, ..., x^n I], built from powers.

    Args:
        shift (ShiftStructure): The block structure
        lam (ArrayLike): Scalar or array of points

    Returns:
        CARRAY: Shape lam.shape + (p, m)
    """
    p, n = shift.dims.p, shift.dims.n
    z = np.asarray(lam, dtype=complex)
    powers = z[..., None] ** np.arange(n + 1)
    rows = powers[..., None, :, None] * np.eye(p)[:, None, :]
    return rows.reshape(z.shape + (p, shift.dims.m))


def evaluate_Fhat(shift: ShiftStructure, lam: ArrayLike) -> CARRAY:
    """x F(x)."""
    z = np.asarray(lam, dtype=complex)
    return z[..., None, None] * evaluate_F(shift, z)


@dataclass(frozen=True, eq=False)
class GramPair:
    """A positive definite Gram matrix G and its inverse Gamma.

    ``kind`` is None for matrices without a known block structure.
    ``min_pivot`` is the smallest Cholesky pivot of G.
    """

    G: CARRAY
    Gamma: CARRAY
    dims: ProblemDims
    kind: MomentKind | None
    min_pivot: float
    moments: MatrixMoments | None = None

    @property
    def m(self) -> int:
        """Total dimension."""
        return self.dims.m

    def _block(self, M: CARRAY, i: int, j: int) -> CARRAY:
        p = self.dims.p
        return M[i * p : (i + 1) * p, j * p : (j + 1) * p]

    def g(self, i: int, j: int) -> CARRAY:
        """Block g_ij of G."""
        return self._block(self.G, i, j)

    def gamma(self, i: int, j: int) -> CARRAY:
        """Block gamma_ij of Gamma."""
        return self._block(self.Gamma, i, j)


def _factor(
    G: ArrayLike,
    dims: ProblemDims,
    kind: MomentKind | None,
    moments: MatrixMoments | None = None,
) -> GramPair:
    """Validate, factor and invert a Gram matrix."""
    arr = np.array(G, dtype=complex)
    if arr.shape != (dims.m, dims.m):
        raise ShapeMismatchError(f"Gram matrix must be {dims.m}x{dims.m}, got {arr.shape}")
    scale = float(np.linalg.norm(arr, 2))
    if float(np.linalg.norm(arr - adjoint(arr))) > SYMMETRY_TOL * max(scale, 1.0):
        raise NotHermitianError("Gram matrix is not Hermitian")
    arr = hermitianize(arr)
    try:
        L = linalg.cholesky(arr, lower=True)
    except linalg.LinAlgError as exc:
        low = float(np.linalg.eigvalsh(arr)[0])
        raise NotPositiveDefiniteError("Cholesky factorization failed", min_pivot=low) from exc
    pivots = np.abs(np.diag(L)) ** 2
    min_pivot = float(pivots.min())
    if min_pivot <= PIVOT_TOL * scale:
        raise NotPositiveDefiniteError(
            f"pivot below {PIVOT_TOL:.0e} relative to ||G||", min_pivot=min_pivot
        )
    Gamma = hermitianize(linalg.cho_solve((L, True), np.eye(dims.m, dtype=complex)))
    residual = float(np.linalg.norm(arr @ Gamma - np.eye(dims.m)))
    if residual > INVERSE_TOL * dims.m:
        warn(
            f"Gram inverse residual {residual:.3e} exceeds {INVERSE_TOL * dims.m:.3e}; "
            f"smallest pivot {min_pivot:.3e}"
        )
    logger.debug(
        "Gram matrix m=%d kind=%s min pivot %.3e inverse residual %.3e",
        dims.m,
        kind.value if kind else None,
        min_pivot,
        residual,
    )
    arr.setflags(write=False)
    Gamma.setflags(write=False)
    return GramPair(arr, Gamma, dims, kind, min_pivot, moments)


def build_gram(moments: MatrixMoments) -> GramPair:
    """Assemble the block Toeplitz (g_ij = h_{i-j}) or Hankel (g_ij = h_{i+j}) Gram matrix.

    Args:
        moments (MatrixMoments): The moment data

    Raises:
        NotPositiveDefiniteError: When a Cholesky pivot is not positive

    Returns:
        GramPair: G with its inverse
    """
    dims = moments.dims
    p, n = dims.p, dims.n
    G = np.zeros((dims.m, dims.m), dtype=complex)
    for i in range(n + 1):
        for j in range(n + 1):
            if moments.kind is MomentKind.TRIGONOMETRIC:
                blk = moments.h(i - j)
            else:
                blk = moments.h(i + j)
            G[i * p : (i + 1) * p, j * p : (j + 1) * p] = blk
    return _factor(G, dims, moments.kind, moments)


def gram_from_matrix(
    G: ArrayLike, dims: ProblemDims, kind: MomentKind | None = None
) -> GramPair:
    """Wrap an arbitrary Hermitian positive definite matrix.

    No block structure is assumed; ``kind`` only records the intended problem.
    """
    return _factor(G, dims, kind)


def reverse_gram(gram: GramPair) -> GramPair:
    """The block-reversed Gram matrix ZGZ, Z the block exchange."""
    p, n = gram.dims.p, gram.dims.n
    order = np.concatenate([np.arange(j * p, (j + 1) * p) for j in range(n, -1, -1)])
    return _factor(gram.G[np.ix_(order, order)], gram.dims, gram.kind)


def _structure_residual(defect: CARRAY, G: CARRAY, p: int) -> float:
    inner = defect[p:, p:]
    return float(np.linalg.norm(inner)) / max(1.0, float(np.linalg.norm(G)))


def toeplitz_residual(G: ArrayLike, shift: ShiftStructure) -> float:
    """Relative size of [G - A*GA] restricted to block rows and columns 1..n."""
    arr = np.asarray(G, dtype=complex)
    A = shift.A
    return _structure_residual(arr - adjoint(A) @ arr @ A, arr, shift.dims.p)


def hankel_residual(G: ArrayLike, shift: ShiftStructure) -> float:
    """Relative size of [GA - A*G] restricted to block rows and columns 1..n."""
    arr = np.asarray(G, dtype=complex)
    A = shift.A
    return _structure_residual(arr @ A - adjoint(A) @ arr, arr, shift.dims.p)


def _rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> CARRAY:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_toeplitz_moments(
    p: int,
    n: int,
    seed: int | np.random.Generator | None = None,
    delta: float = 0.1,
) -> MatrixMoments:
    """Trigonometric moments of W(t) = P(e^it) P(e^it)* + delta I.

    P is a random matrix polynomial of degree n, so the Fourier coefficients
    are exact and the Toeplitz Gram matrix is positive definite.

    Args:
        p (int): Block size
        n (int): Moment order
        seed (int | np.random.Generator | None, optional): Random source.
        delta (float, optional): Ridge keeping W positive. Defaults to 0.1.

    Returns:
        MatrixMoments: h_0..h_n
    """
    rng = _rng(seed)
    P = _complex_normal(rng, (n + 1, p, p)) / np.sqrt(n + 1)
    blocks = np.zeros((n + 1, p, p), dtype=complex)
    for k in range(n + 1):
        for b in range(n + 1 - k):
            blocks[k] += P[b + k] @ adjoint(P[b])
    blocks[0] = hermitianize(blocks[0]) + delta * np.eye(p)
    return MatrixMoments(MomentKind.TRIGONOMETRIC, ProblemDims(p, n), blocks)


def random_hankel_moments(
    p: int,
    n: int,
    seed: int | np.random.Generator | None = None,
    atoms: int | None = None,
    spread: float = 1.5,
) -> MatrixMoments:
    """Hamburger moments h_k = sum_i x_i^k w_i of a discrete matrix measure.

    At least n + 1 distinct real nodes with positive definite weights make the
    Hankel Gram matrix positive definite.

    Args:
        p (int): Block size
        n (int): Moment order
        seed (int | np.random.Generator | None, optional): Random source.
        atoms (int | None, optional): Node count, defaults to 2n + 2.
        spread (float, optional): Nodes are drawn from [-spread, spread].

    Returns:
        MatrixMoments: h_0..h_{2n}
    """
    rng = _rng(seed)
    count = max(atoms or 2 * n + 2, n + 1)
    nodes = np.sort(rng.uniform(-spread, spread, size=count))
    blocks = np.zeros((2 * n + 1, p, p), dtype=complex)
    for x in nodes:
        B = _complex_normal(rng, (p, p))
        w = B @ adjoint(B) / p + 0.2 * np.eye(p)
        blocks += (x ** np.arange(2 * n + 1))[:, None, None] * w[None]
    blocks /= count
    return MatrixMoments(MomentKind.HAMBURGER, ProblemDims(p, n), hermitianize(blocks))


def random_unstructured_gram(
    dims: ProblemDims, seed: int | np.random.Generator | None = None
) -> GramPair:
    """A random Hermitian positive definite matrix with no block structure."""
    rng = _rng(seed)
    X = _complex_normal(rng, (dims.m, dims.m))
    return gram_from_matrix(X @ adjoint(X) / dims.m + 0.5 * np.eye(dims.m), dims)
