# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""From a Gram matrix to de Branges pairs.

The finite-dimensional space H_G of p x 1 polynomials F(x)u, u in C^m, with
inner product v*Gu has reproducing kernel K_w(x) = F(x) Gamma F(w)*. When G is
block Toeplitz (disc) or block Hankel (half-plane) the kernel factors as

    rho_w(x) K_w(x) = E+(x) E+(w)* - E-(x) E-(w)*

for a pair of matrix polynomials (E-, E+). This module builds those pairs,
their densities (E+ E+*)^-1, the Caratheodory transform Phi_E and the
second-kind polynomials.

Every pair stores its column representation: E(x) = x F(x) X + F(x) Y with
X, Y of size m x p. Polynomial coefficients come from block arithmetic on
these columns, never from interpolation.
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike

from .base import (
    AlphaOutOfRegionError,
    DegenerateProblemError,
    InconsistentInputsError,
    KindMismatchError,
    NotHankelError,
    NotToeplitzError,
    OutOfRegionError,
    SingularAtPointError,
)
from .blockmat import (
    GramPair,
    MatrixMoments,
    MomentKind,
    ShiftStructure,
    build_gram,
    evaluate_F,
    evaluate_Fhat,
    hankel_residual,
    toeplitz_residual,
)
from .constants import (
    DEFAULT_DISC_ALPHA,
    DEFAULT_HALF_PLANE_ALPHA,
    STRUCTURE_TOL,
)
from .math_utils import (
    CARRAY,
    adjoint,
    hermitian_inv_sqrt,
    hermitianize,
    left_divide,
    right_divide,
)
from .matpoly import Geometry, MatrixPolynomial, rho, sharp
from .numerics import (
    CircleQuadrature,
    LineQuadrature,
    QuadratureResult,
    circle_integral,
    line_integral,
)

__all__ = (
    "Construction",
    "DeBrangesData",
    "DeBrangesPair",
    "z_alpha",
    "N_alpha",
    "kernel",
    "two_column_vectors",
    "lower_toeplitz",
    "toeplitz_pair",
    "toeplitz_pair_alpha",
    "hankel_pair",
    "hankel_two_column_pair",
    "default_pair",
    "density",
    "phi_E",
    "phi_E_quadrature",
    "second_kind",
    "reflected_inverse",
)

logger = logging.getLogger(__name__)


class Construction(Enum):
    """Which formula produced a de Branges pair."""

    TOEPLITZ_TWO_COLUMN = "toeplitz_two_column"
    TOEPLITZ_ALPHA = "toeplitz_alpha"
    HANKEL_ALPHA = "hankel_alpha"
    HANKEL_TWO_COLUMN = "hankel_two_column"


@dataclass(frozen=True, eq=False)
class DeBrangesData:
    """A Gram pair together with the vectors every construction reuses.

    u_j = Gamma e_j gamma_jj^(-1/2), N0 = Gamma - u_0 u_0*, Nbullet = Gamma - u_n u_n*.
    """

    gram: GramPair
    shift: ShiftStructure
    geometry: Geometry
    alpha: complex | None
    u: tuple[CARRAY, ...]
    N0: CARRAY
    Nbullet: CARRAY

    @classmethod
    def from_gram(
        cls,
        gram: GramPair,
        geometry: Geometry | None = None,
        alpha: complex | None = None,
    ) -> "DeBrangesData":
        """Derive the shared vectors from a Gram pair.

        Args:
            gram (GramPair): G and Gamma
            geometry (Geometry | None, optional): Needed when ``gram.kind`` is None.
            alpha (complex | None, optional): Point for alpha-based constructions.

        Returns:
            DeBrangesData: The data
        """
        if geometry is None:
            if gram.kind is None:
                raise InconsistentInputsError(
                    "A geometry is required for a Gram matrix of unknown kind"
                )
            geometry = gram.kind.geometry
        elif gram.kind is not None and gram.kind.geometry is not geometry:
            raise InconsistentInputsError(
                f"{gram.kind.value} data does not live on the {geometry.value}"
            )
        shift = ShiftStructure(gram.dims)
        u = tuple(
            gram.Gamma @ shift.e(j) @ hermitian_inv_sqrt(gram.gamma(j, j))
            for j in range(gram.dims.n + 1)
        )
        N0 = hermitianize(gram.Gamma - u[0] @ adjoint(u[0]))
        Nb = hermitianize(gram.Gamma - u[-1] @ adjoint(u[-1]))
        logger.debug(
            "de Branges data p=%d n=%d on the %s", gram.dims.p, gram.dims.n, geometry.value
        )
        return cls(
            gram, shift, geometry, None if alpha is None else complex(alpha), u, N0, Nb
        )

    @classmethod
    def from_moments(
        cls, moments: MatrixMoments, alpha: complex | None = None
    ) -> "DeBrangesData":
        """Build the Gram pair and the data in one step."""
        return cls.from_gram(build_gram(moments), alpha=alpha)

    @property
    def G(self) -> CARRAY:
        """The Gram matrix."""
        return self.gram.G

    @property
    def Gamma(self) -> CARRAY:
        """The inverse Gram matrix."""
        return self.gram.Gamma

    @property
    def A(self) -> CARRAY:
        """The block upshift."""
        return self.shift.A

    @property
    def p(self) -> int:
        """Block size."""
        return self.gram.dims.p

    @property
    def n(self) -> int:
        """Moment order."""
        return self.gram.dims.n

    @property
    def m(self) -> int:
        """Total dimension."""
        return self.gram.dims.m

    @property
    def kind(self) -> MomentKind:
        """Problem kind implied by the geometry."""
        if self.geometry is Geometry.DISC:
            return MomentKind.TRIGONOMETRIC
        return MomentKind.HAMBURGER

    @property
    def default_alpha(self) -> complex:
        """The stored alpha, or the geometry default."""
        if self.alpha is not None:
            return self.alpha
        if self.geometry is Geometry.DISC:
            return DEFAULT_DISC_ALPHA
        return DEFAULT_HALF_PLANE_ALPHA

    def e(self, j: int) -> CARRAY:
        """Block injection e_j."""
        return self.shift.e(j)

    def F(self, lam: ArrayLike) -> CARRAY:
        """F(x)."""
        return evaluate_F(self.shift, lam)

    def Fhat(self, lam: ArrayLike) -> CARRAY:
        """x F(x)."""
        return evaluate_Fhat(self.shift, lam)

    def kernel(self, omega: ArrayLike, lam: ArrayLike) -> CARRAY:
        """K_w(x) = F(x) Gamma F(w)*."""
        return kernel(self, omega, lam)

    def is_toeplitz(self) -> bool:
        """Block Toeplitz structure test on G."""
        return toeplitz_residual(self.G, self.shift) <= STRUCTURE_TOL

    def is_hankel(self) -> bool:
        """Block Hankel structure test on G."""
        return hankel_residual(self.G, self.shift) <= STRUCTURE_TOL


def _poly_from_columns(X: CARRAY | None, Y: CARRAY | None, p: int) -> MatrixPolynomial:
    """x F(x) X + F(x) Y as a MatrixPolynomial."""
    ref = X if X is not None else Y
    assert ref is not None
    blocks = ref.shape[0] // p
    coeffs = np.zeros((blocks + 1, p, p), dtype=complex)
    if Y is not None:
        coeffs[:blocks] += Y.reshape(blocks, p, p)
    if X is not None:
        coeffs[1:] += X.reshape(blocks, p, p)
    return MatrixPolynomial(coeffs)


@dataclass(frozen=True, eq=False)
class DeBrangesPair:
    """A de Branges pair (E-, E+) with its provenance.

    ``columns`` holds ((X-, Y-), (X+, Y+)) with E(x) = x F(x) X + F(x) Y.
    """

    eminus: MatrixPolynomial
    eplus: MatrixPolynomial
    geometry: Geometry
    construction: Construction
    alpha: complex | None = None
    columns: tuple[tuple[CARRAY, CARRAY], tuple[CARRAY, CARRAY]] | None = None

    @classmethod
    def from_columns(
        cls,
        minus: tuple[CARRAY, CARRAY],
        plus: tuple[CARRAY, CARRAY],
        p: int,
        geometry: Geometry,
        construction: Construction,
        alpha: complex | None = None,
    ) -> "DeBrangesPair":
        """Build both polynomials from their column representation."""
        return cls(
            _poly_from_columns(*minus, p),
            _poly_from_columns(*plus, p),
            geometry,
            construction,
            alpha,
            (minus, plus),
        )

    @property
    def p(self) -> int:
        """Block size."""
        return self.eplus.p

    def chi(self, lam: ArrayLike) -> CARRAY:
        """chi(x) = E+(x)^-1 E-(x)."""
        return left_divide(self.eplus(lam), self.eminus(lam), SingularAtPointError, "E+")

    def kernel(self, omega: ArrayLike, lam: ArrayLike) -> CARRAY:
        """(E+(x) E+(w)* - E-(x) E-(w)*) / rho_w(x)."""
        num = self.eplus(lam) @ adjoint(self.eplus(omega)) - self.eminus(lam) @ adjoint(
            self.eminus(omega)
        )
        r = np.asarray(rho(omega, lam, self.geometry))
        return num / r[..., None, None]

    def density(self, points: ArrayLike) -> CARRAY:
        """Shortcut for ``density``."""
        return density(self, points)


def z_alpha(data: DeBrangesData, alpha: complex) -> CARRAY:
    """z_alpha = Gamma F(alpha)* (F(alpha) Gamma F(alpha)*)^(-1/2).

    Args:
        data (DeBrangesData): The data
        alpha (complex): Any complex point

    Returns:
        CARRAY: m x p with z* G z = I
    """
    Fa = data.F(alpha)
    col = data.Gamma @ adjoint(Fa)
    return col @ hermitian_inv_sqrt(Fa @ col)


def N_alpha(data: DeBrangesData, alpha: complex) -> CARRAY:
    """N_alpha = Gamma - z_alpha z_alpha*."""
    z = z_alpha(data, alpha)
    return hermitianize(data.Gamma - z @ adjoint(z))


def kernel(data: DeBrangesData, omega: ArrayLike, lam: ArrayLike) -> CARRAY:
    """K_w(x) = F(x) Gamma F(w)*, broadcasting over points."""
    return data.F(lam) @ data.Gamma @ adjoint(data.F(omega))


def two_column_vectors(data: DeBrangesData) -> tuple[CARRAY, CARRAY, CARRAY]:
    """u_n, v_n and w_n for the two-column Hankel formulas.

    v_n = e_{n-1} - e_n gamma_nn^-1 gamma_{n,n-1} and w_n = Gamma v_n gamma_nn^(-1/2).
    """
    n = data.n
    if n < 1:
        raise DegenerateProblemError("Two-column Hankel formulas need n >= 1")
    gnn = data.gram.gamma(n, n)
    v = data.e(n - 1) - data.e(n) @ np.linalg.solve(gnn, data.gram.gamma(n, n - 1))
    w = data.Gamma @ v @ hermitian_inv_sqrt(gnn)
    return data.u[n], v, w


def lower_toeplitz(data: DeBrangesData) -> CARRAY:
    """The block lower triangular matrix with h_0 on the diagonal and 2 h_{i-j} below.

    For Toeplitz G its adjoint is 2G minus itself.
    """
    p, n = data.p, data.n
    L = np.zeros_like(data.G)
    for i in range(n + 1):
        for j in range(i + 1):
            factor = 1.0 if i == j else 2.0
            L[i * p : (i + 1) * p, j * p : (j + 1) * p] = factor * data.gram.g(i, j)
    return L


def _require_toeplitz(data: DeBrangesData) -> None:
    if data.geometry is not Geometry.DISC:
        raise KindMismatchError("Toeplitz constructions live on the disc")
    if not data.is_toeplitz():
        raise NotToeplitzError(
            f"G is not block Toeplitz (residual {toeplitz_residual(data.G, data.shift):.3e})"
        )


def _require_hankel(data: DeBrangesData) -> None:
    if data.geometry is not Geometry.HALF_PLANE:
        raise KindMismatchError("Hankel constructions live on the half-plane")
    if not data.is_hankel():
        raise NotHankelError(
            f"G is not block Hankel (residual {hankel_residual(data.G, data.shift):.3e})"
        )


def toeplitz_pair(data: DeBrangesData) -> DeBrangesPair:
    """E+(x) = F(x) u_0 and E-(x) = x F(x) u_n.

    Args:
        data (DeBrangesData): Toeplitz data on the disc

    Raises:
        NotToeplitzError: When G is not block Toeplitz

    Returns:
        DeBrangesPair: The two-column pair
    """
    _require_toeplitz(data)
    zero = np.zeros_like(data.u[0])
    pair = DeBrangesPair.from_columns(
        (data.u[-1], zero),
        (zero, data.u[0]),
        data.p,
        Geometry.DISC,
        Construction.TOEPLITZ_TWO_COLUMN,
    )
    logger.debug("Toeplitz pair degrees E-=%d E+=%d", pair.eminus.degree, pair.eplus.degree)
    return pair


def toeplitz_pair_alpha(data: DeBrangesData, alpha: complex | None = None) -> DeBrangesPair:
    """The disc pair built at a point alpha with 0 < |alpha| < 1.

    E+(x) = (1 - x conj(a)) F(x) z_a / s and E-(x) = (x - a) F(x) z_{a'} / s
    with a' = 1/conj(a) and s = sqrt(1 - |a|^2).
    """
    _require_toeplitz(data)
    a = complex(data.default_alpha if alpha is None else alpha)
    if not 0.0 < abs(a) < 1.0:
        raise AlphaOutOfRegionError(f"alpha must satisfy 0 < |alpha| < 1, got {a}")
    if data.n < 1:
        raise DegenerateProblemError("alpha-based constructions need n >= 1")
    s = np.sqrt(1.0 - abs(a) ** 2)
    za = z_alpha(data, a)
    zr = z_alpha(data, 1.0 / np.conj(a))
    return DeBrangesPair.from_columns(
        (zr / s, -a * zr / s),
        (-np.conj(a) * za / s, za / s),
        data.p,
        Geometry.DISC,
        Construction.TOEPLITZ_ALPHA,
        a,
    )


def hankel_pair(data: DeBrangesData, alpha: complex | None = None) -> DeBrangesPair:
    """The half-plane pair built at alpha in C+.

    E+(x) = rho_a(x) F(x) z_a / sqrt(rho_a(a)) and
    E-(x) = rho_conj(a)(x) F(x) z_conj(a) / sqrt(rho_a(a)), with
    rho_w(x) = -2 pi i (x - conj(w)) and rho_a(a) = 4 pi Im a.

    Args:
        data (DeBrangesData): Hankel data on the half-plane
        alpha (complex | None, optional): Defaults to the stored alpha or i.

    Raises:
        NotHankelError: When G is not block Hankel
        AlphaOutOfRegionError: When Im alpha <= 0

    Returns:
        DeBrangesPair: The alpha-based pair
    """
    _require_hankel(data)
    a = complex(data.default_alpha if alpha is None else alpha)
    if a.imag <= 0.0:
        raise AlphaOutOfRegionError(f"alpha must lie in the upper half-plane, got {a}")
    if data.n < 1:
        raise DegenerateProblemError("alpha-based constructions need n >= 1")
    root = np.sqrt(4 * np.pi * a.imag)
    za = z_alpha(data, a)
    zb = z_alpha(data, np.conj(a))
    c = -2j * np.pi / root
    pair = DeBrangesPair.from_columns(
        (c * zb, -a * c * zb),
        (c * za, -np.conj(a) * c * za),
        data.p,
        Geometry.HALF_PLANE,
        Construction.HANKEL_ALPHA,
        a,
    )
    logger.debug("Hankel pair at alpha=%s", a)
    return pair


def hankel_two_column_pair(data: DeBrangesData) -> DeBrangesPair:
    """E+- = sqrt(pi) F(x) ((x +- i) u_n - w_n).

    Represents the same space as ``hankel_pair`` but gives a different density.
    """
    _require_hankel(data)
    un, _, wn = two_column_vectors(data)
    r = np.sqrt(np.pi)
    return DeBrangesPair.from_columns(
        (r * un, r * (-1j * un - wn)),
        (r * un, r * (1j * un - wn)),
        data.p,
        Geometry.HALF_PLANE,
        Construction.HANKEL_TWO_COLUMN,
    )


def default_pair(data: DeBrangesData) -> DeBrangesPair:
    """The pair that solutions are built from: two-column on the disc, alpha-based on the half-plane."""
    if data.geometry is Geometry.DISC:
        return toeplitz_pair(data)
    return hankel_pair(data)


def density(pair: DeBrangesPair, points: ArrayLike) -> CARRAY:
    """Delta_E = (E+ E+*)^-1 at boundary points.

    Raises:
        SingularAtPointError: When E+ is numerically singular at a point
    """
    E = pair.eplus(points)
    eye = np.broadcast_to(np.eye(pair.p, dtype=complex), E.shape)
    Einv = left_divide(E, eye, SingularAtPointError, "E+")
    return hermitianize(adjoint(Einv) @ Einv)


def _check_interior(geometry: Geometry, omega: ArrayLike) -> None:
    if not np.all(geometry.contains(omega)):
        raise OutOfRegionError(f"Points must lie in the open {geometry.value}")


def phi_E(data: DeBrangesData, pair: DeBrangesPair, omega: ArrayLike) -> CARRAY:
    """The Caratheodory transform of the density of ``pair`` at interior points.

    On the disc, for the two-column pair, Phi_E(w) = 2 e_0* G (I - w A N0 G)^-1 e_0 - h_0.
    On the half-plane Phi_E = E+o E+^-1 with E+o the second-kind polynomial.
    Other disc pairs fall back to the defining Herglotz integral.

    Args:
        data (DeBrangesData): The data
        pair (DeBrangesPair): The pair
        omega (ArrayLike): Interior points

    Returns:
        CARRAY: Values with shape omega.shape + (p, p)
    """
    if pair.geometry is not data.geometry:
        raise InconsistentInputsError("Pair and data live on different regions")
    w = np.asarray(omega, dtype=complex)
    _check_interior(data.geometry, w)
    if data.geometry is Geometry.DISC:
        if pair.construction is not Construction.TOEPLITZ_TWO_COLUMN:
            return np.stack([phi_E_quadrature(pair, x).value for x in w.ravel()]).reshape(
                w.shape + (data.p, data.p)
            )
        e0 = data.e(0)
        M = data.A @ data.N0 @ data.G
        eye = np.eye(data.m)
        h0 = data.gram.g(0, 0)
        flat = [
            2 * adjoint(e0) @ data.G @ np.linalg.solve(eye - x * M, e0) - h0
            for x in w.ravel()
        ]
        return np.asarray(flat).reshape(w.shape + (data.p, data.p))
    _, eplus_o = second_kind(data, pair)
    return right_divide(eplus_o(w), pair.eplus(w), SingularAtPointError, "E+")


def phi_E_quadrature(
    pair: DeBrangesPair,
    omega: complex,
    circle: CircleQuadrature | None = None,
    line: LineQuadrature | None = None,
) -> QuadratureResult:
    """Phi_E from its defining integral.

    Disc: (1/2pi) int (e^it + w)/(e^it - w) Delta(t) dt.
    Half-plane: (1/(pi i)) int Delta(mu)/(mu - w) dmu.
    """
    w = complex(omega)
    _check_interior(pair.geometry, w)
    if pair.geometry is Geometry.DISC:

        def herglotz(z: CARRAY) -> CARRAY:
            weight = (z + w) / (z - w)
            return weight[:, None, None] * density(pair, z)

        return circle_integral(herglotz, circle)

    def cauchy(mu: np.ndarray) -> CARRAY:
        return density(pair, mu) / (mu - w)[:, None, None] / (1j * np.pi)

    return line_integral(cauchy, 0, line)


def second_kind(
    data: DeBrangesData, pair: DeBrangesPair
) -> tuple[MatrixPolynomial, MatrixPolynomial]:
    """The second-kind polynomials (E-o, E+o).

    Disc, two-column pair: E+o = F L u_0 and E-o = -x F L* u_n, with L the
    block lower triangular matrix of ``lower_toeplitz``.

    Half-plane, any pair with columns: for E(x) = x F(x) X + F(x) Y,
    Eo(w) = -(1/(pi i)) e_0* G (I - w A)^-1 (X + A Y).

    Raises:
        KindMismatchError: For disc pairs other than the two-column pair

    Returns:
        tuple[MatrixPolynomial, MatrixPolynomial]: (E-o, E+o)
    """
    if pair.geometry is not data.geometry:
        raise KindMismatchError("Pair and data belong to different problem kinds")
    if data.geometry is Geometry.DISC:
        if pair.construction is not Construction.TOEPLITZ_TWO_COLUMN:
            raise KindMismatchError(
                "Disc second-kind polynomials are defined for the two-column pair"
            )
        L = lower_toeplitz(data)
        zero = np.zeros_like(data.u[0])
        eplus_o = _poly_from_columns(None, L @ data.u[0], data.p)
        eminus_o = _poly_from_columns(-adjoint(L) @ data.u[-1], zero, data.p)
        return eminus_o, eplus_o
    if pair.columns is None:
        raise KindMismatchError("Half-plane second-kind polynomials need a column representation")
    row = adjoint(data.e(0)) @ data.G
    A = data.A
    out = []
    for X, Y in pair.columns:
        v = X + A @ Y
        coeffs = []
        for _ in range(data.n + 1):
            coeffs.append(row @ v)
            v = A @ v
        out.append(MatrixPolynomial(-np.asarray(coeffs) / (1j * np.pi)))
    return out[0], out[1]


def reflected_inverse(pair: DeBrangesPair, omega: ArrayLike) -> CARRAY:
    """(E-#(w))^-1 with the reflection of the pair's geometry."""
    ref = sharp(pair.eminus, pair.geometry)
    return np.linalg.inv(ref(omega))
