# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Numerical checks of the matrix identities behind the constructions.

Each check returns IdentityReport objects with the largest relative Frobenius
residual ||lhs - rhs|| / max(1, ||lhs||, ||rhs||) over its sample points.
Sample points are drawn from a seeded generator, so reports are reproducible.

The structure-bound chains (Toeplitz, Hankel) also serve as falsification
tests: on a positive definite G without the matching block structure at least
one identity of the chain fails.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

import numpy as np

from .base import AlphaOutOfRegionError, KindMismatchError
from .blockmat import (
    GramPair,
    MomentKind,
    ShiftStructure,
    hankel_residual,
    reverse_gram,
    toeplitz_residual,
)
from .constants import (
    ALGEBRAIC_TOL,
    CARATHEODORY_TOL,
    DEFAULT_DISC_ALPHA,
    DEFAULT_HALF_PLANE_ALPHA,
    IDEMPOTENT_TOL,
    IDENTITY_SAMPLES,
    INVERSE_IDENTITY_TOL,
    QUADRATURE_IDENTITY_TOL,
    RANK_TOL,
    STRUCTURE_TOL,
    THETA_CHECK_POINTS,
    THETA_STRICT_MARGIN,
)
from .debranges import (
    Construction,
    DeBrangesData,
    DeBrangesPair,
    N_alpha,
    density,
    hankel_pair,
    hankel_two_column_pair,
    lower_toeplitz,
    phi_E,
    reflected_inverse,
    second_kind,
    toeplitz_pair,
    two_column_vectors,
    z_alpha,
)
from .math_utils import (
    CARRAY,
    adjoint,
    hermitian_sqrt,
    max_eigenvalue,
    relative_residual,
)
from .matpoly import Geometry, rho
from .numerics import fourier_coeffs
from .solutions import ThetaMatrix, assemble_theta, signature_matrices

__all__ = (
    "IdentityReport",
    "sample_points",
    "realization_rows",
    "check_hankel_chain",
    "check_toeplitz_chain",
    "check_toeplitz_limits",
    "check_gohberg_heinig",
    "check_gohberg_semencul",
    "check_hankel_gh_type",
    "check_two_column_relation",
    "check_isometry_criterion",
    "check_resolvent_identities",
    "check_hamburger_inverse_identities",
    "check_second_kind_relations",
    "check_J_identity",
    "check_theta_signature",
    "check_displacement",
    "check_projection_properties",
    "check_kernel_inverse",
    "check_reproducing_kernel",
    "check_boundary_modulus",
    "check_reverse_polynomial",
    "run_identity_suite",
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityReport:
    """Largest residual of one identity over its samples."""

    name: str
    max_residual: float
    tolerance: float
    samples: int
    seed: int | None = None

    @property
    def passed(self) -> bool:
        """Whether the residual is within tolerance."""
        return bool(self.max_residual <= self.tolerance)

    def to_dict(self) -> dict[str, Any]:
        """{name, residual, tolerance, pass, samples, seed}."""
        return {
            "name": self.name,
            "residual": self.max_residual,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "samples": self.samples,
            "seed": self.seed,
        }


def _report(
    name: str, residuals: Iterable[float], tolerance: float, seed: int | None = None
) -> IdentityReport:
    values = [float(r) for r in residuals]
    worst = max(values) if values else 0.0
    if not np.isfinite(worst):
        worst = float("inf")
    logger.debug("%s residual %.3e (tol %.1e)", name, worst, tolerance)
    return IdentityReport(name, worst, tolerance, len(values), seed)


def sample_points(
    geometry: Geometry, count: int, seed: int, boundary: bool = False
) -> CARRAY:
    """Seeded interior samples, or deterministic boundary samples."""
    if boundary:
        return geometry.boundary_points(count)
    return geometry.interior_points(count, np.random.default_rng(seed))


def _pairs(geometry: Geometry, count: int, seed: int) -> list[tuple[complex, complex]]:
    rng = np.random.default_rng(seed)
    lam = geometry.interior_points(count, rng)
    omega = geometry.interior_points(count, rng)
    return list(zip(lam, omega))


def realization_rows(data: DeBrangesData) -> tuple[CARRAY, CARRAY]:
    """Rows C1, C2 with [C1; C2](I - xA)^-1 realizing the lower row block of Theta's kernel.

    Disc: C1 = -e_0* L* / sqrt(2). Half-plane: C1 = -e_0* G A / (sqrt(2) pi i).
    Both: C2 = e_0* / sqrt(2).
    """
    e0h = adjoint(data.e(0))
    r = np.sqrt(2)
    if data.geometry is Geometry.DISC:
        C1 = -e0h @ adjoint(lower_toeplitz(data)) / r
    else:
        C1 = -e0h @ data.G @ data.A / (r * np.pi * 1j)
    return C1, e0h / r


def check_hankel_chain(
    data: DeBrangesData,
    alpha: complex | None = None,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = ALGEBRAIC_TOL,
) -> list[IdentityReport]:
    """The three equivalent forms of Hankel structure at alpha and conj(alpha).

    1. (x - a')(w' - a) F(x) N_a F(w)* = (x - a)(w' - a') F(x) N_a' F(w)*
    2. (x - a') F(x) N_a (I - a A*) = (x - a) F(x) N_a' (I - a' A*)
    3. (I - a' A) N_a (I - a A*) = (I - a A) N_a' (I - a' A*)

    with a' = conj(a), w' = conj(w).
    """
    a = complex(DEFAULT_HALF_PLANE_ALPHA if alpha is None else alpha)
    if a.imag == 0.0:
        raise AlphaOutOfRegionError("The Hankel chain needs a non-real alpha")
    ac = np.conj(a)
    Na, Nc = N_alpha(data, a), N_alpha(data, ac)
    A, Ah = data.A, adjoint(data.A)
    eye = np.eye(data.m)
    pairs = _pairs(Geometry.HALF_PLANE, count, seed)
    kernel_res, row_res = [], []
    for lam, om in pairs:
        Fl, Fw = data.F(lam), data.F(om)
        lhs = (lam - ac) * (np.conj(om) - a) * Fl @ Na @ adjoint(Fw)
        rhs = (lam - a) * (np.conj(om) - ac) * Fl @ Nc @ adjoint(Fw)
        kernel_res.append(relative_residual(lhs, rhs))
        lhs = (lam - ac) * Fl @ Na @ (eye - a * Ah)
        rhs = (lam - a) * Fl @ Nc @ (eye - ac * Ah)
        row_res.append(relative_residual(lhs, rhs))
    lhs = (eye - ac * A) @ Na @ (eye - a * Ah)
    rhs = (eye - a * A) @ Nc @ (eye - ac * Ah)
    return [
        _report("hankel_chain_kernel", kernel_res, tolerance, seed),
        _report("hankel_chain_row", row_res, tolerance, seed),
        _report("hankel_chain_matrix", [relative_residual(lhs, rhs)], tolerance, seed),
    ]


def check_toeplitz_chain(
    data: DeBrangesData,
    alpha: complex | None = None,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = ALGEBRAIC_TOL,
) -> list[IdentityReport]:
    """The three equivalent forms of Toeplitz structure at alpha and 1/conj(alpha).

    1. (1 - x a')(1 - a w') F(x) N_a F(w)* = (x - a)(w' - a') F(x) N_r F(w)*
    2. (1 - x a') F(x) N_a (I - a' A*)^-1 = -(x - a) F(x) N_r (a I - A*)^-1
    3. (a' I - A) N_a (a I - A*) = (I - a A) N_r (I - a' A*)

    with a' = conj(a), r = 1/a', w' = conj(w).
    """
    a = complex(DEFAULT_DISC_ALPHA if alpha is None else alpha)
    if a == 0:
        raise AlphaOutOfRegionError("The Toeplitz chain needs a nonzero alpha")
    ac = np.conj(a)
    Na, Nr = N_alpha(data, a), N_alpha(data, 1.0 / ac)
    A, Ah = data.A, adjoint(data.A)
    eye = np.eye(data.m)
    left_inv = np.linalg.inv(eye - ac * Ah)
    right_inv = np.linalg.inv(a * eye - Ah)
    kernel_res, row_res = [], []
    for lam, om in _pairs(Geometry.DISC, count, seed):
        Fl, Fw = data.F(lam), data.F(om)
        lhs = (1 - lam * ac) * (1 - a * np.conj(om)) * Fl @ Na @ adjoint(Fw)
        rhs = (lam - a) * (np.conj(om) - ac) * Fl @ Nr @ adjoint(Fw)
        kernel_res.append(relative_residual(lhs, rhs))
        lhs = (1 - lam * ac) * Fl @ Na @ left_inv
        rhs = -(lam - a) * Fl @ Nr @ right_inv
        row_res.append(relative_residual(lhs, rhs))
    lhs = (ac * eye - A) @ Na @ (a * eye - Ah)
    rhs = (eye - a * A) @ Nr @ (eye - ac * Ah)
    return [
        _report("toeplitz_chain_kernel", kernel_res, tolerance, seed),
        _report("toeplitz_chain_row", row_res, tolerance, seed),
        _report("toeplitz_chain_matrix", [relative_residual(lhs, rhs)], tolerance, seed),
    ]


def check_toeplitz_limits(
    data: DeBrangesData,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = ALGEBRAIC_TOL,
) -> list[IdentityReport]:
    """A N0 A* = Nbullet, A N0 = Nbullet A and their kernel forms.

    F(x) N0 F(w)* = x w' F(x) Nbullet F(w)* and F(x) N0 A* = x F(x) Nbullet.
    """
    A, Ah = data.A, adjoint(data.A)
    N0, Nb = data.N0, data.Nbullet
    kernel_res, row_res = [], []
    for lam, om in _pairs(Geometry.DISC, count, seed):
        Fl, Fw = data.F(lam), data.F(om)
        kernel_res.append(
            relative_residual(Fl @ N0 @ adjoint(Fw), lam * np.conj(om) * Fl @ Nb @ adjoint(Fw))
        )
        row_res.append(relative_residual(Fl @ N0 @ Ah, lam * Fl @ Nb))
    return [
        _report("toeplitz_limit_sandwich", [relative_residual(A @ N0 @ Ah, Nb)], tolerance, seed),
        _report("toeplitz_limit_intertwining", [relative_residual(A @ N0, Nb @ A)], tolerance, seed),
        _report("toeplitz_limit_kernel", kernel_res, tolerance, seed),
        _report("toeplitz_limit_row", row_res, tolerance, seed),
    ]


def check_gohberg_heinig(data: DeBrangesData, tolerance: float = ALGEBRAIC_TOL) -> IdentityReport:
    """Gamma = sum_j A^j (u_n u_n* - A u_0 u_0* A*) (A*)^j."""
    A, Ah = data.A, adjoint(data.A)
    u0, un = data.u[0], data.u[-1]
    term = un @ adjoint(un) - A @ u0 @ adjoint(u0) @ Ah
    total = np.zeros_like(data.Gamma)
    for _ in range(data.n + 1):
        total += term
        term = A @ term @ Ah
    return _report("gohberg_heinig", [relative_residual(data.Gamma, total)], tolerance)


def check_gohberg_semencul(data: DeBrangesData, tolerance: float = ALGEBRAIC_TOL) -> IdentityReport:
    """Gamma = U U* - V V* with U = [u_n, A u_n, ...] and V = [A u_0, A^2 u_0, ..., 0]."""
    A = data.A
    u_cols, v_cols = [], []
    un, au0 = data.u[-1], A @ data.u[0]
    for _ in range(data.n + 1):
        u_cols.append(un)
        v_cols.append(au0)
        un, au0 = A @ un, A @ au0
    U = np.concatenate(u_cols, axis=1)
    V = np.concatenate(v_cols, axis=1)
    return _report("gohberg_semencul", [relative_residual(data.Gamma, U @ adjoint(U) - V @ adjoint(V))], tolerance)


def check_hankel_gh_type(
    data: DeBrangesData,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = ALGEBRAIC_TOL,
) -> IdentityReport:
    """Gamma = u_n u_n* + sum_j A^(j+1) (u_n w_n* - w_n u_n*) A^j, and x F(x) Nbullet = F(x) A* Nbullet."""
    un, _, wn = two_column_vectors(data)
    A, Ah = data.A, adjoint(data.A)
    B = un @ adjoint(wn) - wn @ adjoint(un)
    total = un @ adjoint(un)
    left, right = A, np.eye(data.m)
    for _ in range(data.n + 1):
        total = total + left @ B @ right
        left, right = A @ left, right @ A
    residuals = [relative_residual(data.Gamma, total)]
    Nb = data.Nbullet
    for lam in sample_points(Geometry.HALF_PLANE, count, seed):
        Fl = data.F(lam)
        residuals.append(relative_residual(lam * Fl @ Nb, Fl @ Ah @ Nb))
    return _report("hankel_gh_type", residuals, tolerance, seed)


def check_two_column_relation(data: DeBrangesData, tolerance: float = ALGEBRAIC_TOL) -> IdentityReport:
    """A* Nbullet - Nbullet A + w_n u_n* - u_n w_n* = 0."""
    un, _, wn = two_column_vectors(data)
    A, Ah, Nb = data.A, adjoint(data.A), data.Nbullet
    lhs = Ah @ Nb - Nb @ A + wn @ adjoint(un) - un @ adjoint(wn)
    return _report("two_column_relation", [relative_residual(lhs, np.zeros_like(lhs))], tolerance)


def check_isometry_criterion(
    gram: GramPair, kind: MomentKind, tolerance: float = STRUCTURE_TOL
) -> IdentityReport:
    """Whether [G - A*GA] (Toeplitz) or [GA - A*G] (Hankel) vanishes on block rows and columns 1..n."""
    shift = ShiftStructure(gram.dims)
    if kind is MomentKind.TRIGONOMETRIC:
        return _report("isometry_toeplitz", [toeplitz_residual(gram.G, shift)], tolerance)
    return _report("isometry_hankel", [hankel_residual(gram.G, shift)], tolerance)


def _require_pair(pair: DeBrangesPair, *constructions: Construction) -> None:
    if pair.construction not in constructions:
        names = ", ".join(c.value for c in constructions)
        raise KindMismatchError(f"This check needs a {names} pair, got {pair.construction.value}")


def check_resolvent_identities(
    data: DeBrangesData,
    pair: DeBrangesPair,
    count: int = 10,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> list[IdentityReport]:
    """Resolvent forms on the disc for the two-column pair.

    1. E+(w)^-1 = {I - w u_0* G A (I - w N0 G A)^-1 u_0} gamma_00^(-1/2)
    2. e_0* G (I - w A N0 G)^-1 u_n = {w E-#(w)}^-1
    3. (1/2pi) int e^{-ikt} Delta_E dt = e_0* G (A N0 G)^k e_0 for k = 0..2n+4
    """
    _require_pair(pair, Construction.TOEPLITZ_TWO_COLUMN)
    G, A, N0 = data.G, data.A, data.N0
    u0, un, e0 = data.u[0], data.u[-1], data.e(0)
    eye = np.eye(data.m)
    root = np.linalg.inv(hermitian_sqrt(data.gram.gamma(0, 0)))
    pts = sample_points(Geometry.DISC, count, seed)
    pts = np.where(np.abs(pts) < 0.05, 0.05, pts)
    inv_res, sharp_res = [], []
    for w in pts:
        lhs = np.linalg.inv(pair.eplus(w))
        rhs = (np.eye(data.p) - w * adjoint(u0) @ G @ A @ np.linalg.solve(eye - w * N0 @ G @ A, u0)) @ root
        inv_res.append(relative_residual(lhs, rhs))
        lhs = adjoint(e0) @ G @ np.linalg.solve(eye - w * A @ N0 @ G, un)
        rhs = reflected_inverse(pair, w) / w
        sharp_res.append(relative_residual(lhs, rhs))
    ks = list(range(2 * data.n + 5))
    res = fourier_coeffs(lambda z: density(pair, z), ks)
    M = A @ N0 @ G
    fourier_res = []
    power = np.eye(data.m, dtype=complex)
    for k in ks:
        fourier_res.append(relative_residual(res.value[k], adjoint(e0) @ G @ power @ e0))
        power = power @ M
    return [
        _report("resolvent_eplus_inverse", inv_res, tolerance, seed),
        _report("resolvent_eminus_sharp", sharp_res, tolerance, seed),
        _report("resolvent_fourier", fourier_res, QUADRATURE_IDENTITY_TOL, seed),
    ]


def check_hamburger_inverse_identities(
    data: DeBrangesData,
    pair: DeBrangesPair,
    count: int = 10,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> list[IdentityReport]:
    """Realizations through Q = I - z_a (e_0* z_a)^-1 e_0* (which is idempotent).

    1. z_a E+(x)^-1 = (sqrt(rho_a(a)) / rho_a(x)) (I - xA)(I - xQA)^-1 z_a (e_0* z_a)^-1
    2. E+(x)^-1 = (sqrt(rho_a(a)) / rho_a(x)) (e_0* z_a)^-1 {I - x e_0* A (I - xQA)^-1 z_a (e_0* z_a)^-1}
    3. Phi_E(w) = (2 / rho_a(w)) e_0* G (I - a' A)(I - wQA)^-1 z_a (e_0* z_a)^-1
    """
    _require_pair(pair, Construction.HANKEL_ALPHA)
    a = complex(pair.alpha if pair.alpha is not None else data.default_alpha)
    G, A = data.G, data.A
    eye = np.eye(data.m)
    e0h = adjoint(data.e(0))
    z = z_alpha(data, a)
    head = np.linalg.inv(e0h @ z)
    Q = eye - z @ head @ e0h
    root = np.sqrt(4 * np.pi * a.imag)
    col_res, inv_res, phi_res = [], [], []
    pts = sample_points(Geometry.HALF_PLANE, count, seed)
    for x in pts:
        scale = root / rho(a, x, Geometry.HALF_PLANE)
        inner = np.linalg.solve(eye - x * Q @ A, z @ head)
        Einv = np.linalg.inv(pair.eplus(x))
        col_res.append(relative_residual(z @ Einv, scale * (eye - x * A) @ inner))
        rhs = scale * head @ (np.eye(data.p) - x * e0h @ A @ inner)
        inv_res.append(relative_residual(Einv, rhs))
        phi = 2 / rho(a, x, Geometry.HALF_PLANE) * e0h @ G @ (eye - np.conj(a) * A) @ inner
        phi_res.append(relative_residual(phi_E(data, pair, x), phi))
    return [
        _report("hamburger_q_idempotent", [relative_residual(Q @ Q, Q)], IDEMPOTENT_TOL, seed),
        _report("hamburger_column_realization", col_res, tolerance, seed),
        _report("hamburger_inverse_realization", inv_res, tolerance, seed),
        _report("hamburger_phi_resolvent", phi_res, tolerance, seed),
    ]


def check_second_kind_relations(
    data: DeBrangesData,
    pair: DeBrangesPair,
    count: int = 10,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> list[IdentityReport]:
    """E+o = Phi_E E+ and E-o = Phi_E E- - 2 (E-#)^-1 at interior points."""
    eminus_o, eplus_o = second_kind(data, pair)
    pts = sample_points(data.geometry, count, seed)
    if data.geometry is Geometry.DISC:
        pts = np.where(np.abs(pts) < 0.05, 0.05, pts)
    phi = phi_E(data, pair, pts)
    plus = [relative_residual(eplus_o(w), phi[i] @ pair.eplus(w)) for i, w in enumerate(pts)]
    minus = [
        relative_residual(eminus_o(w), phi[i] @ pair.eminus(w) - 2 * reflected_inverse(pair, w))
        for i, w in enumerate(pts)
    ]
    return [
        _report(f"second_kind_plus_{pair.construction.value}", plus, tolerance, seed),
        _report(f"second_kind_minus_{pair.construction.value}", minus, tolerance, seed),
    ]


def check_J_identity(
    theta: ThetaMatrix,
    data: DeBrangesData,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> IdentityReport:
    """J_p - Theta(x) j_p Theta(w)* = rho_w(x) FF(x) Gamma FF(w)* with FF(x) = [C1; C2](I - xA)^-1."""
    J, j = signature_matrices(data.p)
    C = np.concatenate(realization_rows(data), axis=0)
    eye = np.eye(data.m)
    residuals = []
    for lam, om in _pairs(data.geometry, count, seed):
        FFl = C @ np.linalg.inv(eye - lam * data.A)
        FFw = C @ np.linalg.inv(eye - om * data.A)
        lhs = J - theta(lam) @ j @ adjoint(theta(om))
        rhs = rho(om, lam, data.geometry) * FFl @ data.Gamma @ adjoint(FFw)
        residuals.append(relative_residual(lhs, rhs))
    return _report("theta_J_identity", residuals, tolerance, seed)


def check_theta_signature(
    theta: ThetaMatrix,
    count: int = THETA_CHECK_POINTS,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
    strict: bool = False,
) -> list[IdentityReport]:
    """Theta j Theta* = J on the boundary and Theta j Theta* <= J inside.

    The interior residual is the largest eigenvalue of Theta j Theta* - J,
    clipped at zero. With ``strict`` a third report asks for that eigenvalue to
    stay below -THETA_STRICT_MARGIN. The inequality is only strict where FF(w)
    has full row rank, so the trivial problems fail it.
    """
    J, j = signature_matrices(theta.p)
    boundary = [
        relative_residual(t @ j @ adjoint(t), J)
        for t in theta(theta.geometry.boundary_points(count))
    ]
    inside = theta(sample_points(theta.geometry, count, seed))
    top = max_eigenvalue(inside @ j @ adjoint(inside) - J)
    reports = [
        _report("theta_boundary_signature", boundary, tolerance, seed),
        _report("theta_interior_contractive", np.maximum(top, 0.0), CARATHEODORY_TOL, seed),
    ]
    if strict:
        margin = np.maximum(top + THETA_STRICT_MARGIN, 0.0)
        reports.append(_report("theta_interior_strict", margin, 0.0, seed))
    return reports


def check_displacement(
    data: DeBrangesData,
    kind: MomentKind | None = None,
    tolerance: float = ALGEBRAIC_TOL,
) -> IdentityReport:
    """Displacement identities in terms of C1, C2.

    Trigonometric: G - A*GA = [C1* C2*] J [C1; C2].
    Hamburger: A*G - GA = -2 pi i [C1* C2*] J [C1; C2].
    """
    kind = kind or data.kind
    if kind is not data.kind:
        raise KindMismatchError(f"Data on the {data.geometry.value} cannot be checked as {kind.value}")
    J, _ = signature_matrices(data.p)
    C = np.concatenate(realization_rows(data), axis=0)
    form = adjoint(C) @ J @ C
    G, A, Ah = data.G, data.A, adjoint(data.A)
    if kind is MomentKind.TRIGONOMETRIC:
        res = relative_residual(G - Ah @ G @ A, form)
        return _report("displacement_trigonometric", [res], tolerance)
    res = relative_residual(Ah @ G - G @ A, -2j * np.pi * form)
    return _report("displacement_hamburger", [res], tolerance)


def check_projection_properties(
    data: DeBrangesData,
    alpha: complex | None = None,
    tolerance: float = ALGEBRAIC_TOL,
) -> list[IdentityReport]:
    """Properties of N_a = Gamma - z_a z_a*.

    N G N = N, F(a) N = 0, rank N = m - p, ||G^(1/2) N G^(1/2)|| = 1,
    (NG)^2 = NG and N G z_a = 0.
    """
    a = complex(data.default_alpha if alpha is None else alpha)
    G = data.G
    z = z_alpha(data, a)
    N = N_alpha(data, a)
    NG = N @ G
    sv = np.linalg.svd(N, compute_uv=False)
    rank = int(np.sum(sv > RANK_TOL * np.linalg.norm(data.Gamma, 2)))
    Gh = hermitian_sqrt(G)
    norm = float(np.linalg.norm(Gh @ N @ Gh, 2))
    zero_row = np.zeros((data.p, data.m))
    reports = [
        _report("projection_idempotent", [relative_residual(N @ G @ N, N)], tolerance),
        _report("projection_kills_alpha", [relative_residual(data.F(a) @ N, zero_row)], tolerance),
        _report("projection_rank", [abs(rank - (data.m - data.p))], 0.0),
        _report("projection_isometric_gram", [relative_residual(z.conj().T @ G @ z, np.eye(data.p))], tolerance),
        _report("projection_algebra", [relative_residual(NG @ NG, NG)], tolerance),
        _report("projection_annihilates_z", [relative_residual(NG @ z, np.zeros_like(z))], tolerance),
    ]
    if data.n >= 1:
        reports.append(_report("projection_norm", [abs(norm - 1.0)], RANK_TOL))
    return reports


def check_kernel_inverse(
    data: DeBrangesData,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> IdentityReport:
    """K_w(x)^-1 = K_w(w)^-1 F(w) z_w {F(x) z_w}^-1 where F(x) z_w is well conditioned."""
    residuals = []
    for lam, om in _pairs(data.geometry, count, seed):
        z = z_alpha(data, om)
        Fz = data.F(lam) @ z
        if np.linalg.cond(Fz) > 1e8:
            continue
        lhs = np.linalg.inv(data.kernel(om, lam))
        rhs = np.linalg.inv(data.kernel(om, om)) @ data.F(om) @ z @ np.linalg.inv(Fz)
        residuals.append(relative_residual(lhs, rhs))
    return _report("kernel_inverse", residuals, tolerance, seed)


def check_reproducing_kernel(
    data: DeBrangesData,
    pair: DeBrangesPair,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = ALGEBRAIC_TOL,
) -> IdentityReport:
    """rho_w(x) K_w(x) = E+(x) E+(w)* - E-(x) E-(w)*."""
    residuals = []
    for lam, om in _pairs(data.geometry, count, seed):
        lhs = rho(om, lam, data.geometry) * data.kernel(om, lam)
        rhs = pair.eplus(lam) @ adjoint(pair.eplus(om)) - pair.eminus(lam) @ adjoint(pair.eminus(om))
        residuals.append(relative_residual(lhs, rhs))
    return _report(f"reproducing_kernel_{pair.construction.value}", residuals, tolerance, seed)


def check_boundary_modulus(
    pair: DeBrangesPair, count: int = IDENTITY_SAMPLES, tolerance: float = ALGEBRAIC_TOL
) -> IdentityReport:
    """E+ E+* = E- E-* on the boundary."""
    pts = pair.geometry.boundary_points(count)
    Ep, Em = pair.eplus(pts), pair.eminus(pts)
    residuals = [
        relative_residual(Ep[i] @ adjoint(Ep[i]), Em[i] @ adjoint(Em[i])) for i in range(count)
    ]
    return _report(f"boundary_modulus_{pair.construction.value}", residuals, tolerance)


def check_reverse_polynomial(
    data: DeBrangesData,
    count: int = IDENTITY_SAMPLES,
    seed: int = 0,
    tolerance: float = INVERSE_IDENTITY_TOL,
) -> IdentityReport:
    """E+ built from the block-reversed Gram matrix equals x^(n+1) E-(1/x)."""
    pair = toeplitz_pair(data)
    flipped = toeplitz_pair(DeBrangesData.from_gram(reverse_gram(data.gram), Geometry.DISC))
    pts = sample_points(Geometry.DISC, count, seed)
    pts = np.where(np.abs(pts) < 0.05, 0.05, pts)
    residuals = [
        relative_residual(flipped.eplus(x), x ** (data.n + 1) * pair.eminus(1 / x)) for x in pts
    ]
    return _report("reverse_polynomial", residuals, tolerance, seed)


def run_identity_suite(
    data: DeBrangesData,
    seed: int = 0,
    tolerance: float | None = None,
    structure_only: bool = False,
) -> list[IdentityReport]:
    """Every check that applies to the data's kind.

    With ``structure_only`` only the checks that need no de Branges pair are
    run; these are the ones that must fail on a perturbed Gram matrix.

    Args:
        data (DeBrangesData): The data
        seed (int, optional): Seed for sample points. Defaults to 0.
        tolerance (float | None, optional): Overrides the algebraic tolerance.
        structure_only (bool, optional): Skip pair-based checks.

    Returns:
        list[IdentityReport]: All reports
    """
    alg = ALGEBRAIC_TOL if tolerance is None else tolerance
    inv = INVERSE_IDENTITY_TOL if tolerance is None else max(tolerance, INVERSE_IDENTITY_TOL)
    reports: list[IdentityReport] = [check_isometry_criterion(data.gram, data.kind)]
    reports += check_projection_properties(data, tolerance=alg)
    reports.append(check_kernel_inverse(data, seed=seed, tolerance=inv))
    if data.geometry is Geometry.DISC:
        reports += check_toeplitz_chain(data, seed=seed, tolerance=alg)
        reports += check_toeplitz_limits(data, seed=seed, tolerance=alg)
        reports.append(check_gohberg_heinig(data, tolerance=alg))
        reports.append(check_gohberg_semencul(data, tolerance=alg))
        reports.append(check_displacement(data, tolerance=alg))
        if structure_only:
            return _logged(reports)
        pair = toeplitz_pair(data)
        reports.append(check_reproducing_kernel(data, pair, seed=seed, tolerance=alg))
        reports.append(check_boundary_modulus(pair, tolerance=alg))
        reports.append(check_reverse_polynomial(data, seed=seed, tolerance=inv))
        reports += check_resolvent_identities(data, pair, seed=seed, tolerance=inv)
    else:
        reports += check_hankel_chain(data, seed=seed, tolerance=alg)
        if data.n >= 1:
            reports.append(check_hankel_gh_type(data, seed=seed, tolerance=alg))
            reports.append(check_two_column_relation(data, tolerance=alg))
        reports.append(check_displacement(data, tolerance=alg))
        if structure_only:
            return _logged(reports)
        pair = hankel_pair(data)
        two = hankel_two_column_pair(data)
        for p in (pair, two):
            reports.append(check_reproducing_kernel(data, p, seed=seed, tolerance=alg))
            reports.append(check_boundary_modulus(p, tolerance=alg))
        reports += check_second_kind_relations(data, two, seed=seed, tolerance=inv)
        reports += check_hamburger_inverse_identities(data, pair, seed=seed, tolerance=inv)
    reports += check_second_kind_relations(data, pair, seed=seed, tolerance=inv)
    theta = assemble_theta(data, pair)
    reports.append(check_J_identity(theta, data, seed=seed, tolerance=inv))
    reports += check_theta_signature(theta, seed=seed, tolerance=inv)
    return _logged(reports)


def _logged(reports: list[IdentityReport]) -> list[IdentityReport]:
    failed = [r.name for r in reports if not r.passed]
    logger.info("Identity suite: %d checks, %d failed", len(reports), len(failed))
    return reports
