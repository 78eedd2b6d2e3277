# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Matrix polynomials, the two geometries, reflections and Blaschke factors."""

from collections.abc import Sequence
from dataclasses import FrozenInstanceError, dataclass
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .base import AlphaOutOfRegionError, EvalAtZeroError, ShapeMismatchError
from .constants import (
    DISC_SAMPLE_RADIUS,
    HALF_PLANE_BOUNDARY_SPAN,
    HALF_PLANE_SAMPLE_BOX,
    TRIM_TOL,
)
from .math_utils import CARRAY, adjoint

__all__ = (
    "Geometry",
    "MatrixPolynomial",
    "DiscReflection",
    "BlaschkeFactor",
    "sharp",
    "blaschke",
    "rho",
    "block_to_json",
    "block_from_json",
)


class Geometry(Enum):
    """The region Omega+ on which a de Branges pair lives."""

    DISC = "disc"
    HALF_PLANE = "half-plane"

    def contains(self, points: ArrayLike, closed: bool = False) -> NDArray[np.bool_]:
        """Test whether points lie in Omega+ (or its closure).

        Args:
            points (ArrayLike): Complex points
            closed (bool, optional): Include the boundary. Defaults to False.

        Returns:
            NDArray[np.bool_]: Membership per point
        """
        z = np.asarray(points, dtype=complex)
        if self is Geometry.DISC:
            return np.abs(z) <= 1.0 if closed else np.abs(z) < 1.0
        return z.imag >= 0.0 if closed else z.imag > 0.0

    def boundary_points(self, count: int) -> CARRAY:
        """Deterministic boundary samples.

        Equispaced roots of unity for the disc, Chebyshev-spread reals in
        [-3, 3] for the half-plane.
        """
        j = np.arange(count)
        if self is Geometry.DISC:
            return np.exp(2j * np.pi * j / count)
        nodes = np.cos((2 * j + 1) * np.pi / (2 * count))
        return (HALF_PLANE_BOUNDARY_SPAN * nodes).astype(complex)

    def interior_points(self, count: int, rng: np.random.Generator) -> CARRAY:
        """Random interior samples away from the boundary.

        Args:
            count (int): Number of points
            rng (np.random.Generator): Random source

        Returns:
            CARRAY: Points in |z| <= 0.9 or in [-3, 3] + i[0.1, 3]
        """
        if self is Geometry.DISC:
            r = DISC_SAMPLE_RADIUS * np.sqrt(rng.uniform(size=count))
            return r * np.exp(2j * np.pi * rng.uniform(size=count))
        x0, x1, y0, y1 = HALF_PLANE_SAMPLE_BOX
        return rng.uniform(x0, x1, size=count) + 1j * rng.uniform(y0, y1, size=count)

    def interior_grid(self, size: int = 7) -> CARRAY:
        """A deterministic size x size interior grid.

        Polar for the disc, a rectangle with geometric heights for the
        half-plane.
        """
        if self is Geometry.DISC:
            radii = np.linspace(0.0, DISC_SAMPLE_RADIUS, size)
            angles = 2 * np.pi * (np.arange(size) + 0.5) / size
            return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
        x0, x1, y0, y1 = HALF_PLANE_SAMPLE_BOX
        xs = np.linspace(x0, x1, size)
        ys = np.geomspace(y0, y1, size)
        return (xs[:, None] + 1j * ys[None, :]).ravel()

    def approach(self, points: ArrayLike, step: float) -> CARRAY:
        """Move boundary points a distance ``step`` into Omega+."""
        z = np.asarray(points, dtype=complex)
        if self is Geometry.DISC:
            return (1.0 - step) * z
        return z + 1j * step


def block_to_json(block: ArrayLike) -> list[list[list[float]]]:
    """Write a p x p complex block as nested [re, im] pairs."""
    arr = np.asarray(block, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in arr]


def block_from_json(block: Any, p: int | None = None) -> CARRAY:
    """Read a block written by ``block_to_json``.

    Plain real entries are accepted too.

    Args:
        block (Any): Nested lists
        p (int | None, optional): Expected size. Defaults to None.

    Returns:
        CARRAY: The p x p block
    """
    try:
        arr = np.asarray(block, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ShapeMismatchError(f"Cannot read matrix block: {exc}") from exc
    if arr.ndim == 3 and arr.shape[-1] == 2:
        out = arr[..., 0] + 1j * arr[..., 1]
    elif arr.ndim == 2:
        out = arr.astype(complex)
    else:
        raise ShapeMismatchError(f"Matrix block has shape {arr.shape}")
    if out.shape[0] != out.shape[1]:
        raise ShapeMismatchError(f"Matrix block is not square: {out.shape}")
    if p is not None and out.shape[0] != p:
        raise ShapeMismatchError(f"Expected a {p}x{p} block, got {out.shape}")
    return out


class MatrixPolynomial:
    """A p x p matrix polynomial c_0 + c_1 x + ... + c_d x^d.

    Coefficients are stored as a read-only array of shape (d + 1, p, p). A
    trailing block is dropped when its Frobenius norm is at most ``TRIM_TOL``
    times the largest coefficient norm, so the stored degree is the numerical
    degree.

    Polynomials are immutable and support +, -, negation, products with
    scalars, p x p matrices and other polynomials.
    """

    __slots__ = ("_coeffs",)
    # numpy defers to our reflected operators
    __array_ufunc__ = None

    def __init__(self, coeffs: ArrayLike, trim: bool = True) -> None:
        arr = np.array(coeffs, dtype=complex)
        if arr.ndim == 2:
            arr = arr[None, :, :]
        if arr.ndim != 3 or arr.shape[1] != arr.shape[2] or arr.shape[0] == 0:
            raise ShapeMismatchError(
                f"Coefficients must have shape (d + 1, p, p), got {arr.shape}"
            )
        if trim:
            arr = self._trim(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "_coeffs", arr)

    @staticmethod
    def _trim(arr: CARRAY) -> CARRAY:
        norms = np.linalg.norm(arr, axis=(1, 2))
        top = float(norms.max())
        if top == 0.0:
            return arr[:1].copy()
        keep = np.nonzero(norms > TRIM_TOL * top)[0]
        return arr[: keep[-1] + 1].copy()

    def __setattr__(self, name: str, value: Any) -> None:
        raise FrozenInstanceError(f"MatrixPolynomial is immutable, cannot set {name}")

    @classmethod
    def zero(cls, p: int) -> "MatrixPolynomial":
        """The zero polynomial."""
        return cls(np.zeros((1, p, p), dtype=complex))

    @classmethod
    def identity(cls, p: int) -> "MatrixPolynomial":
        """The constant polynomial I_p."""
        return cls(np.eye(p, dtype=complex)[None])

    @classmethod
    def monomial(cls, k: int, block: ArrayLike) -> "MatrixPolynomial":
        """The polynomial block * x^k."""
        b = np.asarray(block, dtype=complex)
        coeffs = np.zeros((k + 1, *b.shape), dtype=complex)
        coeffs[k] = b
        return cls(coeffs)

    @classmethod
    def from_json(cls, data: Sequence[Any]) -> "MatrixPolynomial":
        """Read the list of coefficient blocks written by ``to_json``."""
        return cls(np.stack([block_from_json(b) for b in data]))

    @property
    def coeffs(self) -> CARRAY:
        """Coefficient blocks c_0..c_d, shape (d + 1, p, p)."""
        return self._coeffs

    @property
    def p(self) -> int:
        """Block size."""
        return int(self._coeffs.shape[1])

    @property
    def degree(self) -> int:
        """Numerical degree."""
        return int(self._coeffs.shape[0] - 1)

    @property
    def leading(self) -> CARRAY:
        """The top coefficient block c_d."""
        return self._coeffs[-1]

    def coefficient(self, k: int) -> CARRAY:
        """Coefficient of x^k, zero beyond the degree."""
        if 0 <= k <= self.degree:
            return self._coeffs[k]
        return np.zeros((self.p, self.p), dtype=complex)

    def __call__(self, lam: ArrayLike) -> CARRAY:
        """Evaluate by Horner's rule.

        Args:
            lam (ArrayLike): Scalar or array of points

        Returns:
            CARRAY: Values with shape lam.shape + (p, p)
        """
        z = np.asarray(lam, dtype=complex)[..., None, None]
        out = np.broadcast_to(self._coeffs[-1], z.shape[:-2] + (self.p, self.p))
        out = out.astype(complex)
        for c in self._coeffs[-2::-1]:
            out = out * z + c
        return out

    evaluate = __call__

    def _padded(self, other: "MatrixPolynomial") -> tuple[CARRAY, CARRAY]:
        if other.p != self.p:
            raise ShapeMismatchError(f"Block sizes differ: {self.p} and {other.p}")
        size = max(self.degree, other.degree) + 1
        a = np.zeros((size, self.p, self.p), dtype=complex)
        b = np.zeros_like(a)
        a[: self.degree + 1] = self._coeffs
        b[: other.degree + 1] = other._coeffs
        return a, b

    def __add__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        a, b = self._padded(other)
        return MatrixPolynomial(a + b)

    def __sub__(self, other: "MatrixPolynomial") -> "MatrixPolynomial":
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        a, b = self._padded(other)
        return MatrixPolynomial(a - b)

    def __neg__(self) -> "MatrixPolynomial":
        return MatrixPolynomial(-self._coeffs)

    def __mul__(self, other: Any) -> "MatrixPolynomial":
        if isinstance(other, MatrixPolynomial):
            if other.p != self.p:
                raise ShapeMismatchError(
                    f"Block sizes differ: {self.p} and {other.p}"
                )
            out = np.zeros(
                (self.degree + other.degree + 1, self.p, self.p), dtype=complex
            )
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a @ b
            return MatrixPolynomial(out)
        if np.isscalar(other):
            return MatrixPolynomial(self._coeffs * complex(other))
        block = np.asarray(other, dtype=complex)
        if block.shape != (self.p, self.p):
            return NotImplemented
        return MatrixPolynomial(self._coeffs @ block)

    def __rmul__(self, other: Any) -> "MatrixPolynomial":
        if np.isscalar(other):
            return MatrixPolynomial(complex(other) * self._coeffs)
        block = np.asarray(other, dtype=complex)
        if block.shape != (self.p, self.p):
            return NotImplemented
        return MatrixPolynomial(block @ self._coeffs)

    def shift(self, k: int = 1) -> "MatrixPolynomial":
        """Multiply by x^k."""
        pad = np.zeros((k, self.p, self.p), dtype=complex)
        return MatrixPolynomial(np.concatenate([pad, self._coeffs]))

    def scale_by(self, scalar_coeffs: Sequence[complex]) -> "MatrixPolynomial":
        """Multiply by a scalar polynomial given low-to-high coefficients."""
        s = np.asarray(scalar_coeffs, dtype=complex)
        out = np.zeros((self.degree + len(s), self.p, self.p), dtype=complex)
        for i, a in enumerate(s):
            out[i : i + self.degree + 1] += a * self._coeffs
        return MatrixPolynomial(out)

    def adjoint_coefficients(self) -> "MatrixPolynomial":
        """The polynomial with coefficients c_k*."""
        return MatrixPolynomial(adjoint(self._coeffs))

    def reversed(self, degree: int | None = None) -> "MatrixPolynomial":
        """x^d f(1/conj(x))* as a polynomial, with d the degree by default."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ShapeMismatchError(f"Cannot reverse a degree {self.degree} polynomial at {d}")
        out = np.zeros((d + 1, self.p, self.p), dtype=complex)
        out[d - self.degree :] = adjoint(self._coeffs)[::-1]
        return MatrixPolynomial(out)

    def allclose(self, other: "MatrixPolynomial", atol: float = 1e-12) -> bool:
        """Coefficientwise comparison."""
        a, b = self._padded(other)
        return bool(np.allclose(a, b, rtol=0.0, atol=atol))

    def to_json(self) -> list[list[list[list[float]]]]:
        """Coefficient blocks as nested [re, im] pairs."""
        return [block_to_json(c) for c in self._coeffs]

    def __repr__(self) -> str:
        return f"MatrixPolynomial(p={self.p}, degree={self.degree})"


@dataclass(frozen=True, eq=False)
class DiscReflection:
    """Evaluator for the disc reflection f#(x) = f(1/conj(x))*.

    This is a Laurent polynomial in x, so it is exposed as an evaluator. The
    polynomial x^d f#(x) is available as ``reversed``.
    """

    poly: MatrixPolynomial

    @property
    def reversed(self) -> MatrixPolynomial:
        """x^d f#(x) with d the degree of f."""
        return self.poly.reversed()

    def __call__(self, lam: ArrayLike) -> CARRAY:
        z = np.asarray(lam, dtype=complex)
        if np.any(z == 0):
            raise EvalAtZeroError("The disc reflection has a pole at the origin")
        return adjoint(self.poly(1.0 / np.conj(z)))


def sharp(
    poly: MatrixPolynomial, geometry: Geometry
) -> MatrixPolynomial | DiscReflection:
    """The reflection f# for the given geometry.

    Args:
        poly (MatrixPolynomial): The polynomial f
        geometry (Geometry): Disc or half-plane

    Returns:
        MatrixPolynomial | DiscReflection: f(conj(x))* as a polynomial on the
            half-plane, an evaluator for f(1/conj(x))* on the disc.
    """
    if geometry is Geometry.HALF_PLANE:
        return poly.adjoint_coefficients()
    return DiscReflection(poly)


@dataclass(frozen=True)
class BlaschkeFactor:
    """The elementary Blaschke factor vanishing at ``alpha``."""

    alpha: complex
    geometry: Geometry

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        if not bool(self.geometry.contains(self.alpha)):
            raise AlphaOutOfRegionError(
                f"Blaschke point {self.alpha} is not in the open {self.geometry.value}"
            )

    def __call__(self, lam: ArrayLike) -> CARRAY:
        z = np.asarray(lam, dtype=complex)
        a = self.alpha
        if self.geometry is Geometry.DISC:
            return (z - a) / (1.0 - z * np.conj(a))
        return (z - a) / (z - np.conj(a))


def blaschke(alpha: complex, geometry: Geometry) -> BlaschkeFactor:
    """b_alpha for the disc, (x - a)/(1 - x conj(a)), or half-plane, (x - a)/(x - conj(a)).

    Args:
        alpha (complex): Zero of the factor, inside Omega+
        geometry (Geometry): Disc or half-plane

    Returns:
        BlaschkeFactor: Callable scalar function
    """
    return BlaschkeFactor(alpha, geometry)


def rho(omega: ArrayLike, lam: ArrayLike, geometry: Geometry) -> CARRAY:
    """rho_omega(lam): 1 - lam conj(omega) on the disc, -2 pi i (lam - conj(omega)) on the half-plane."""
    w = np.asarray(omega, dtype=complex)
    z = np.asarray(lam, dtype=complex)
    if geometry is Geometry.DISC:
        return 1.0 - z * np.conj(w)
    return -2j * np.pi * (z - np.conj(w))
