# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""The Theta matrix and the solutions it parameterizes.

Theta = (1/sqrt(2)) [[E-o, E+o], [E-, E+]] maps a Schur class parameter S to

    Phi = T_Theta[S] = (Theta11 S + Theta12) (Theta21 S + Theta22)^-1,

a Caratheodory function whose boundary density
Delta_S = (Phi + Phi*)/2 solves the truncated moment problem. S = 0 gives the
maximum entropy solution Delta_E.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from typing import Any
from warnings import warn

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy import fft, linalg

from .base import (
    BoundaryDegenerateError,
    InconsistentInputsError,
    InputError,
    KindMismatchError,
    NotContractiveError,
    OutOfRegionError,
    RestrictedClassError,
    SingularDenominatorError,
    SingularMeasureError,
)
from .constants import (
    CONDITION_LIMIT,
    DEFAULT_DISC_ALPHA,
    DEFAULT_HALF_PLANE_ALPHA,
    ENTROPY_EQUALITY_TOL,
    ENTROPY_TOL,
    INVERSE_IDENTITY_TOL,
    RADIAL_STEP,
    RESTRICTED_CLASS_DROP,
    RESTRICTED_CLASS_HEIGHTS,
    SCHUR_GRID,
    SCHUR_TOL,
    TAYLOR_NODES,
    TAYLOR_RADIUS,
    THETA_CHECK_POINTS,
)
from .debranges import Construction, DeBrangesData, DeBrangesPair, second_kind
from .math_utils import (
    CARRAY,
    adjoint,
    hermitianize,
    min_eigenvalue,
    relative_residual,
    right_divide,
    spectral_norm,
)
from .matpoly import BlaschkeFactor, Geometry, MatrixPolynomial, block_from_json
from .numerics import (
    CircleQuadrature,
    LineQuadrature,
    fourier_coeffs,
    line_integral,
    poisson_log_integral,
)

__all__ = (
    "ThetaMatrix",
    "SchurRepresentation",
    "SchurParameter",
    "SolutionFunction",
    "RestrictedClassReport",
    "EntropyReport",
    "signature_matrices",
    "assemble_theta",
    "lft_eval",
    "boundary_density",
    "radial_density",
    "recover_trig_moments",
    "recover_hamburger_moments",
    "chi_and_chi_infinity",
    "check_restricted_class",
    "entropy_check",
    "sample_schur",
    "taylor_coefficients",
    "caratheodory_margin",
    "density_sup_distance",
)

logger = logging.getLogger(__name__)


def signature_matrices(p: int) -> tuple[CARRAY, CARRAY]:
    """J_p = [[0, -I], [-I, 0]] and j_p = diag(I, -I)."""
    eye = np.eye(p, dtype=complex)
    zero = np.zeros((p, p), dtype=complex)
    J = np.block([[zero, -eye], [-eye, zero]])
    j = np.block([[eye, zero], [zero, -eye]])
    return J, j


def _leading_ratio(eplus: MatrixPolynomial, eminus: MatrixPolynomial) -> CARRAY:
    d = max(eplus.degree, eminus.degree)
    return np.linalg.solve(eplus.coefficient(d), eminus.coefficient(d))


@dataclass(frozen=True, eq=False)
class ThetaMatrix:
    """The 2p x 2p matrix polynomial (1/sqrt(2)) [[E-o, E+o], [E-, E+]]."""

    theta11: MatrixPolynomial
    theta12: MatrixPolynomial
    theta21: MatrixPolynomial
    theta22: MatrixPolynomial
    geometry: Geometry
    construction: Construction
    n: int

    @property
    def p(self) -> int:
        """Block size."""
        return self.theta22.p

    def blocks(self, lam: ArrayLike) -> tuple[CARRAY, CARRAY, CARRAY, CARRAY]:
        """The four p x p blocks evaluated at the points."""
        return self.theta11(lam), self.theta12(lam), self.theta21(lam), self.theta22(lam)

    def __call__(self, lam: ArrayLike) -> CARRAY:
        t11, t12, t21, t22 = self.blocks(lam)
        top = np.concatenate([t11, t12], axis=-1)
        bottom = np.concatenate([t21, t22], axis=-1)
        return np.concatenate([top, bottom], axis=-2)

    def chi_infinity(self) -> CARRAY:
        """Leading-coefficient ratio of Theta22 and Theta21."""
        return _leading_ratio(self.theta22, self.theta21)

    def to_json(self) -> dict[str, Any]:
        """Coefficient blocks of the four entries."""
        return {
            "geometry": self.geometry.value,
            "construction": self.construction.value,
            "theta11": self.theta11.to_json(),
            "theta12": self.theta12.to_json(),
            "theta21": self.theta21.to_json(),
            "theta22": self.theta22.to_json(),
        }


def assemble_theta(
    data: DeBrangesData,
    pair: DeBrangesPair,
    second: tuple[MatrixPolynomial, MatrixPolynomial] | None = None,
) -> ThetaMatrix:
    """Assemble Theta and check Theta j Theta* = J on boundary samples.

    Args:
        data (DeBrangesData): The data
        pair (DeBrangesPair): (E-, E+)
        second (tuple | None, optional): (E-o, E+o); computed when omitted.

    Raises:
        InconsistentInputsError: When the pieces do not fit together

    Returns:
        ThetaMatrix: The assembled matrix
    """
    if pair.geometry is not data.geometry:
        raise InconsistentInputsError("Pair and data live on different regions")
    eminus_o, eplus_o = second_kind(data, pair) if second is None else second
    if {eminus_o.p, eplus_o.p, pair.p} != {data.p}:
        raise InconsistentInputsError("Block sizes of the Theta entries differ")
    r = 1 / np.sqrt(2)
    theta = ThetaMatrix(
        r * eminus_o, r * eplus_o, r * pair.eminus, r * pair.eplus,
        data.geometry, pair.construction, data.n,
    )
    J, j = signature_matrices(data.p)
    pts = data.geometry.boundary_points(THETA_CHECK_POINTS)
    T = theta(pts)
    residual = max(relative_residual(t @ j @ adjoint(t), J) for t in T)
    if residual > INVERSE_IDENTITY_TOL:
        raise InconsistentInputsError(
            f"Theta j Theta* = J fails on the boundary (residual {residual:.3e})"
        )
    logger.debug("Theta assembled, boundary J residual %.2e", residual)
    return theta


class SchurRepresentation(Enum):
    """How a Schur parameter was specified."""

    ZERO = "zero"
    CONSTANT = "constant"
    BLASCHKE_UNITARY = "blaschke_unitary"
    PRODUCT = "product"


@dataclass(frozen=True, eq=False)
class SchurParameter:
    """A p x p contractive analytic function on the disc or half-plane.

    ``func`` maps an array of points to the stack of values.
    """

    func: Callable[[CARRAY], CARRAY]
    p: int
    geometry: Geometry
    representation: SchurRepresentation
    constant: CARRAY | None = None
    alpha: complex | None = None
    factors: tuple["SchurParameter", ...] = field(default=())

    def __call__(self, omega: ArrayLike) -> CARRAY:
        return self.func(np.asarray(omega, dtype=complex))

    @property
    def is_constant(self) -> bool:
        """Whether S is a constant matrix."""
        return self.constant is not None

    def max_norm(self, count: int = SCHUR_GRID) -> float:
        """Largest spectral norm over half interior, half boundary samples."""
        rng = np.random.default_rng(0)
        half = count // 2
        pts = np.concatenate(
            [
                self.geometry.interior_points(count - half, rng),
                self.geometry.boundary_points(half),
            ]
        )
        return float(spectral_norm(self(pts)).max())

    def validate(self) -> "SchurParameter":
        """Raise NotContractiveError when ||S|| exceeds 1 on the validation grid."""
        top = self.max_norm()
        if top > 1.0 + SCHUR_TOL:
            raise NotContractiveError(f"Schur parameter has norm {top:.6f} > 1")
        return self

    @classmethod
    def zero(cls, p: int, geometry: Geometry) -> "SchurParameter":
        """S = 0."""
        S0 = np.zeros((p, p), dtype=complex)
        return cls(_constant_func(S0), p, geometry, SchurRepresentation.ZERO, S0)

    @classmethod
    def from_constant(cls, matrix: ArrayLike, geometry: Geometry) -> "SchurParameter":
        """S = a constant contraction."""
        S0 = np.array(matrix, dtype=complex)
        if S0.ndim != 2 or S0.shape[0] != S0.shape[1]:
            raise InputError(f"Constant Schur parameter must be square, got {S0.shape}")
        norm = float(np.linalg.norm(S0, 2))
        if norm > 1.0 + SCHUR_TOL:
            raise NotContractiveError(f"Constant Schur parameter has norm {norm:.6f} > 1")
        S0.setflags(write=False)
        return cls(_constant_func(S0), S0.shape[0], geometry, SchurRepresentation.CONSTANT, S0)

    @classmethod
    def blaschke_unitary(
        cls, alpha: complex, unitary: ArrayLike, geometry: Geometry
    ) -> "SchurParameter":
        """S = b_alpha U with U unitary."""
        U = np.array(unitary, dtype=complex)
        p = U.shape[0]
        if U.shape != (p, p) or not np.allclose(U @ adjoint(U), np.eye(p), atol=1e-10):
            raise NotContractiveError("Blaschke parameter needs a unitary matrix")
        b = BlaschkeFactor(alpha, geometry)

        def func(z: CARRAY) -> CARRAY:
            return np.asarray(b(z))[..., None, None] * U

        return cls(func, p, geometry, SchurRepresentation.BLASCHKE_UNITARY, alpha=b.alpha).validate()

    @classmethod
    def product(cls, factors: Sequence["SchurParameter"]) -> "SchurParameter":
        """S = S_1 S_2 ... S_k."""
        if not factors:
            raise InputError("A product Schur parameter needs at least one factor")
        geometries = {f.geometry for f in factors}
        sizes = {f.p for f in factors}
        if len(geometries) != 1 or len(sizes) != 1:
            raise InconsistentInputsError("Product factors must share region and size")
        parts = tuple(factors)

        def func(z: CARRAY) -> CARRAY:
            out = parts[0](z)
            for f in parts[1:]:
                out = out @ f(z)
            return out

        constant = None
        if all(f.is_constant for f in parts):
            constant = parts[0].constant
            for f in parts[1:]:
                constant = constant @ f.constant
        return cls(
            func, parts[0].p, parts[0].geometry, SchurRepresentation.PRODUCT,
            constant, factors=parts,
        )


def _constant_func(S0: CARRAY) -> Callable[[CARRAY], CARRAY]:
    def func(z: CARRAY) -> CARRAY:
        return np.broadcast_to(S0, np.shape(z) + S0.shape).copy()

    return func


def _random_unitary(p: int, rng: np.random.Generator) -> CARRAY:
    Z = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
    Q, R = linalg.qr(Z)
    phases = np.diag(R) / np.abs(np.diag(R))
    return Q * phases[None, :]


def _read_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InputError(f"Complex numbers are written as [re, im], got {value}")
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def sample_schur(
    spec: dict[str, Any],
    p: int,
    geometry: Geometry,
    seed: int | np.random.Generator | None = None,
) -> SchurParameter:
    """Build a Schur parameter from a specification dictionary.

    Recognized specifications:

    - ``{"type": "zero"}``
    - ``{"type": "constant", "matrix": block}``, ``{"type": "constant", "value": s}``
      (s times the identity) or ``{"type": "constant", "sigma_max": s}`` (random,
      largest singular value s)
    - ``{"type": "blaschke_unitary", "alpha": [re, im], "unitary": block}``; a
      random unitary is drawn when ``unitary`` is omitted
    - ``{"type": "product", "factors": [spec, ...]}``

    Args:
        spec (dict[str, Any]): The specification
        p (int): Block size
        geometry (Geometry): Region of the parameter
        seed (int | np.random.Generator | None, optional): Random source.

    Raises:
        NotContractiveError: When the result is not a contraction
        InputError: For unknown or malformed specifications

    Returns:
        SchurParameter: The validated parameter
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    if not isinstance(spec, dict) or "type" not in spec:
        raise InputError(f"Schur specification needs a 'type': {spec!r}")
    kind = spec["type"]
    if kind == "zero":
        return SchurParameter.zero(p, geometry)
    if kind == "constant":
        if "matrix" in spec:
            return SchurParameter.from_constant(block_from_json(spec["matrix"], p), geometry)
        if "value" in spec:
            return SchurParameter.from_constant(_read_complex(spec["value"]) * np.eye(p), geometry)
        sigma = float(spec.get("sigma_max", 0.5))
        if sigma > 1.0:
            raise NotContractiveError(f"sigma_max {sigma} exceeds 1")
        X = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
        U, s, Vh = linalg.svd(X)
        return SchurParameter.from_constant((U * (sigma * s / s.max())) @ Vh, geometry)
    if kind == "blaschke_unitary":
        default = DEFAULT_DISC_ALPHA if geometry is Geometry.DISC else DEFAULT_HALF_PLANE_ALPHA
        alpha = _read_complex(spec.get("alpha", default))
        if "unitary" in spec:
            U = block_from_json(spec["unitary"], p)
        else:
            U = _random_unitary(p, rng)
        return SchurParameter.blaschke_unitary(alpha, U, geometry)
    if kind == "product":
        factors = [sample_schur(f, p, geometry, rng) for f in spec.get("factors", [])]
        return SchurParameter.product(factors).validate()
    raise InputError(f"Unknown Schur parameter type {kind!r}")


@dataclass(frozen=True, eq=False)
class SolutionFunction:
    """Phi = T_Theta[S] together with its source Theta and S."""

    theta: ThetaMatrix
    schur: SchurParameter

    def __post_init__(self) -> None:
        if self.theta.geometry is not self.schur.geometry:
            raise InconsistentInputsError("Theta and S live on different regions")
        if self.theta.p != self.schur.p:
            raise InconsistentInputsError("Theta and S have different block sizes")

    @property
    def geometry(self) -> Geometry:
        """The region."""
        return self.theta.geometry

    @property
    def p(self) -> int:
        """Block size."""
        return self.theta.p

    def __call__(self, omega: ArrayLike) -> CARRAY:
        return lft_eval(self.theta, self.schur, omega)

    def density(self, points: ArrayLike) -> CARRAY:
        """Boundary density Delta_S."""
        return boundary_density(self, points)


def lft_eval(theta: ThetaMatrix, S: SchurParameter, omega: ArrayLike) -> CARRAY:
    """T_Theta[S](w) = (Theta11 S + Theta12)(Theta21 S + Theta22)^-1 at interior points.

    Raises:
        OutOfRegionError: When a point is not interior
        SingularDenominatorError: When Theta21 S + Theta22 is numerically singular
    """
    w = np.asarray(omega, dtype=complex)
    if not np.all(theta.geometry.contains(w)):
        raise OutOfRegionError(f"T_Theta[S] is evaluated in the open {theta.geometry.value}")
    t11, t12, t21, t22 = theta.blocks(w)
    Sw = S(w)
    return right_divide(t11 @ Sw + t12, t21 @ Sw + t22, SingularDenominatorError, "Theta21 S + Theta22")


def _check_boundary(geometry: Geometry, z: CARRAY) -> None:
    if geometry is Geometry.DISC:
        off = np.abs(np.abs(z) - 1.0)
    else:
        off = np.abs(z.imag)
    if np.any(off > 1e-9):
        raise OutOfRegionError(f"Points must lie on the boundary of the {geometry.value}")


def radial_density(
    solution: SolutionFunction, points: ArrayLike, step: float = RADIAL_STEP
) -> CARRAY:
    """Re Phi approached from inside, with one Richardson step.

    Args:
        solution (SolutionFunction): Phi
        points (ArrayLike): Boundary points
        step (float, optional): Approach distance. Defaults to RADIAL_STEP.

    Returns:
        CARRAY: Estimates of (Phi + Phi*)/2 on the boundary
    """
    z = np.asarray(points, dtype=complex)
    near = solution(solution.geometry.approach(z, step))
    far = solution(solution.geometry.approach(z, 2 * step))
    return hermitianize(2 * hermitianize(near) - hermitianize(far))


def boundary_density(solution: SolutionFunction, points: ArrayLike) -> CARRAY:
    """Delta_S = (Phi + Phi*)/2 on the boundary.

    Uses Delta_S = D^-* (I - S*S) D^-1 / 2 with D = Theta21 S + Theta22 where
    ||S|| < 1, and the radial limit where S has unit norm.

    Raises:
        BoundaryDegenerateError: When neither form can be evaluated
    """
    z = np.asarray(points, dtype=complex)
    geometry = solution.geometry
    _check_boundary(geometry, z)
    _, _, t21, t22 = solution.theta.blocks(z)
    Sz = solution.schur(z)
    D = t21 @ Sz + t22
    eye = np.eye(solution.p, dtype=complex)
    unit = spectral_norm(Sz) >= 1.0 - SCHUR_TOL
    cond = np.linalg.cond(D)
    bad = ~np.isfinite(cond) | (cond > CONDITION_LIMIT)
    if np.any(bad & ~unit):
        raise BoundaryDegenerateError("Theta21 S + Theta22 is singular at a boundary point")
    out = np.zeros(z.shape + (solution.p, solution.p), dtype=complex)
    good = ~bad & ~unit
    if np.any(good):
        Dinv = np.linalg.inv(D[good])
        gap = eye - adjoint(Sz[good]) @ Sz[good]
        out[good] = adjoint(Dinv) @ gap @ Dinv / 2
    if np.any(unit):
        try:
            out[unit] = radial_density(solution, z[unit])
        except SingularDenominatorError as exc:
            raise BoundaryDegenerateError(
                "Unit-norm S with a singular denominator at a boundary point"
            ) from exc
    return hermitianize(out)


def _require_strict(solution: SolutionFunction) -> None:
    top = float(spectral_norm(solution.schur(solution.geometry.boundary_points(SCHUR_GRID))).max())
    if top >= 1.0 - SCHUR_TOL:
        raise SingularMeasureError(
            f"S has norm {top:.6f} on the boundary; the solution measure is not absolutely continuous"
        )


def recover_trig_moments(
    solution: SolutionFunction,
    count: int | None = None,
    config: CircleQuadrature | None = None,
) -> CARRAY:
    """h_k = (1/2pi) int e^{-ikt} Delta_S(t) dt for k = 0..count-1.

    ``count`` defaults to n + 1; pass n + 2 to see the first unconstrained moment.

    Raises:
        SingularMeasureError: When S reaches unit norm on the circle
    """
    if solution.geometry is not Geometry.DISC:
        raise KindMismatchError("Trigonometric moments need a disc solution")
    _require_strict(solution)
    ks = range(solution.theta.n + 1 if count is None else count)
    res = fourier_coeffs(lambda z: boundary_density(solution, z), list(ks), config)
    logger.debug("Recovered %d trigonometric moments (error %.2e)", len(ks), res.error_estimate)
    return np.asarray(res.value)


def recover_hamburger_moments(
    solution: SolutionFunction,
    count: int | None = None,
    config: LineQuadrature | None = None,
) -> CARRAY:
    """h_k = int mu^k Delta_S(mu) dmu for k = 0..count-1 (default 2n + 1).

    Raises:
        RestrictedClassError: When S is not in the restricted class
        SingularMeasureError: When S reaches unit norm on the line
    """
    if solution.geometry is not Geometry.HALF_PLANE:
        raise KindMismatchError("Hamburger moments need a half-plane solution")
    report = check_restricted_class(solution.schur, solution.theta.chi_infinity())
    if not report.in_class:
        raise RestrictedClassError(
            "S violates lim nu^-1 (I + chi_inf S(i nu))^-1 = 0: values "
            + ", ".join(f"{v:.3e}" for v in report.values)
        )
    _require_strict(solution)
    powers = np.arange(2 * solution.theta.n + 1 if count is None else count)

    def integrand(mu: NDArray[np.float64]) -> CARRAY:
        dens = boundary_density(solution, mu.astype(complex))
        return (mu[:, None] ** powers[None, :])[..., None, None] * dens[:, None]

    res = line_integral(integrand, 0, config)
    logger.debug("Recovered %d Hamburger moments (error %.2e)", len(powers), res.error_estimate)
    return np.asarray(res.value)


def chi_and_chi_infinity(
    pair: DeBrangesPair,
) -> tuple[Callable[[ArrayLike], CARRAY], CARRAY]:
    """chi = E+^-1 E- and its limit at i infinity.

    chi_inf is the leading-coefficient ratio; chi(i nu) at nu = 1e3, 1e4 is a
    cross-check and only warns.
    """
    if pair.geometry is not Geometry.HALF_PLANE:
        raise KindMismatchError("chi_inf is defined for half-plane pairs")
    chi_inf = _leading_ratio(pair.eplus, pair.eminus)
    diffs = [float(np.linalg.norm(pair.chi(1j * nu) - chi_inf)) for nu in (1e3, 1e4)]
    if not (diffs[1] < diffs[0] and diffs[1] <= 1e-2 * max(1.0, float(np.linalg.norm(chi_inf)))):
        warn(f"chi(i nu) approaches chi_inf slowly: differences {diffs[0]:.2e}, {diffs[1]:.2e}")
    return pair.chi, chi_inf


@dataclass(frozen=True)
class RestrictedClassReport:
    """nu^-1 ||(I + chi_inf S(i nu))^-1|| at the probe heights."""

    heights: tuple[float, ...]
    values: tuple[float, ...]
    in_class: bool


def check_restricted_class(
    S: SchurParameter,
    chi_inf: ArrayLike,
    heights: Sequence[float] = RESTRICTED_CLASS_HEIGHTS,
) -> RestrictedClassReport:
    """Test the growth condition of the restricted Hamburger class.

    The values must decrease and the last must be at most 1e-2 times the first.
    A singular I + chi_inf S(i nu) gives an infinite value.
    """
    if S.geometry is not Geometry.HALF_PLANE:
        raise KindMismatchError("The restricted class is a half-plane notion")
    X = np.asarray(chi_inf, dtype=complex)
    eye = np.eye(S.p)
    values = []
    for nu in heights:
        M = eye + X @ S(1j * nu)
        if np.linalg.cond(M) > CONDITION_LIMIT:
            values.append(float("inf"))
        else:
            values.append(float(np.linalg.norm(np.linalg.inv(M), 2)) / nu)
    finite = all(np.isfinite(values))
    decreasing = finite and all(b < a for a, b in zip(values, values[1:]))
    small = finite and values[-1] <= RESTRICTED_CLASS_DROP * values[0] * (1 + 1e-9)
    return RestrictedClassReport(tuple(heights), tuple(values), bool(decreasing and small))


@dataclass(frozen=True)
class EntropyReport:
    """Poisson-averaged log det Delta_S against its bound at omega.

    lhs = P_w[ln det Delta_S], rhs = -ln det(E+ E+* - E- E-*)(w), gap = rhs - lhs.
    """

    omega: complex
    lhs: float
    rhs: float
    gap: float
    equality_case: bool
    error_estimate: float

    def to_dict(self) -> dict[str, Any]:
        """JSON friendly form."""
        return {
            "omega": [self.omega.real, self.omega.imag],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "equality_case": self.equality_case,
            "error_estimate": self.error_estimate,
        }


def entropy_check(
    data: DeBrangesData,
    pair: DeBrangesPair,
    theta: ThetaMatrix,
    S: SchurParameter,
    omega: complex,
    circle: CircleQuadrature | None = None,
    line: LineQuadrature | None = None,
) -> EntropyReport:
    """Evaluate the entropy inequality for one Schur parameter.

    Equality holds exactly when S is the constant -chi(w)*. The report flags
    it when S matches that constant and the gap is within ENTROPY_EQUALITY_TOL.
    A gap below -ENTROPY_TOL warns.

    Raises:
        IntegrandSingularError: When ln det Delta_S is not integrable
    """
    if not (data.geometry is pair.geometry is theta.geometry is S.geometry):
        raise InconsistentInputsError("Entropy inputs live on different regions")
    w = complex(omega)
    solution = SolutionFunction(theta, S)
    res = poisson_log_integral(
        lambda z: boundary_density(solution, z), w, data.geometry, circle, line
    )
    Ep = pair.eplus(w)
    Em = pair.eminus(w)
    sign, logdet = np.linalg.slogdet(hermitianize(Ep @ adjoint(Ep) - Em @ adjoint(Em)))
    if sign.real <= 0:
        raise InconsistentInputsError(f"E+E+* - E-E-* is not positive at {w}")
    rhs = -float(logdet)
    lhs = float(res.value)
    gap = rhs - lhs
    if gap < -ENTROPY_TOL:
        warn(f"Entropy inequality violated at {w}: gap {gap:.3e}", stacklevel=2)
    equality = False
    if S.is_constant:
        target = -adjoint(pair.chi(w))
        extremal = relative_residual(S.constant, target) <= 1e-10
        equality = extremal and abs(gap) <= ENTROPY_EQUALITY_TOL
        if extremal and not equality:
            logger.warning("S = -chi(w)* but the entropy gap is %.3e", gap)
    return EntropyReport(w, lhs, rhs, gap, equality, res.error_estimate)


def taylor_coefficients(
    solution: SolutionFunction,
    count: int,
    radius: float = TAYLOR_RADIUS,
    nodes: int = TAYLOR_NODES,
) -> CARRAY:
    """Taylor coefficients of Phi at 0 from samples on |w| = radius.

    Every solution starts h_0 + 2 h_1 w + ... + 2 h_n w^n.
    """
    if solution.geometry is not Geometry.DISC:
        raise KindMismatchError("Taylor coefficients at 0 are a disc notion")
    z = radius * np.exp(2j * np.pi * np.arange(nodes) / nodes)
    coeffs = fft.fft(solution(z), axis=0) / nodes
    k = np.arange(count)
    return coeffs[:count] / (radius**k)[:, None, None]


def caratheodory_margin(solution: SolutionFunction, size: int = 7) -> float:
    """Smallest eigenvalue of Re Phi over a size x size interior grid."""
    values = solution(solution.geometry.interior_grid(size))
    return float(min_eigenvalue(values).min())


def density_sup_distance(
    first: SolutionFunction, second: SolutionFunction, points: ArrayLike
) -> float:
    """Largest spectral-norm difference of two boundary densities."""
    diff = boundary_density(first, points) - boundary_density(second, points)
    return float(spectral_norm(diff).max())
