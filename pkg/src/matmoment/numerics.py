# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Quadrature on the unit circle and the real line.

Circle integrals use the trapezoid rule on M equispaced nodes (spectrally
accurate for the rational densities built here) with M doubling. Real-line
integrals use the substitution mu = tan(t) and composite Gauss-Legendre
panels with panel doubling.
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray
from scipy import fft
from scipy.special import roots_legendre

from .base import InputError, IntegrandSingularError, NonconvergenceError, OutOfRegionError
from .constants import (
    CIRCLE_MAX_DOUBLINGS,
    CIRCLE_NODES,
    CIRCLE_TOL,
    GAUSS_LEGENDRE_ORDER,
    LINE_MAX_DOUBLINGS,
    LINE_PANELS,
    LINE_TOL,
)
from .math_utils import CARRAY
from .matpoly import Geometry

__all__ = (
    "Sampler",
    "QuadratureResult",
    "CircleQuadrature",
    "LineQuadrature",
    "fourier_coeffs",
    "circle_integral",
    "line_integral",
    "poisson_log_integral",
)

logger = logging.getLogger(__name__)

Sampler = Callable[[CARRAY], NDArray]


@dataclass(frozen=True)
class QuadratureResult:
    """An integral estimate with its last-two-iterate difference."""

    value: NDArray
    error_estimate: float
    converged: bool
    nodes: int


@dataclass(frozen=True)
class CircleQuadrature:
    """Trapezoid rule on ``nodes`` equispaced angles, doubled until ``tol``."""

    nodes: int = CIRCLE_NODES
    tol: float = CIRCLE_TOL
    max_doublings: int = CIRCLE_MAX_DOUBLINGS

    def __post_init__(self) -> None:
        if self.nodes < 2 or self.nodes & (self.nodes - 1):
            raise InputError(f"Circle node count must be a power of two, got {self.nodes}")

    @staticmethod
    def angles(count: int) -> NDArray[np.float64]:
        """t_j = 2 pi j / count."""
        return 2 * np.pi * np.arange(count) / count


@dataclass(frozen=True)
class LineQuadrature:
    """Composite Gauss-Legendre after mu = tan(t), panels doubled until tolerance."""

    order: int = GAUSS_LEGENDRE_ORDER
    panels: int = LINE_PANELS
    abs_tol: float = LINE_TOL
    rel_tol: float = 0.0
    max_doublings: int = LINE_MAX_DOUBLINGS

    def __post_init__(self) -> None:
        if self.order < 1 or self.panels < 1:
            raise InputError(f"Line quadrature needs order and panels >= 1, got {self.order}, {self.panels}")

    def rule(self, panels: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """Nodes and weights on [-1, 1] for the given panel count."""
        x, w = roots_legendre(self.order)
        edges = np.linspace(-1.0, 1.0, panels + 1)
        half = (edges[1:] - edges[:-1]) / 2
        mid = (edges[1:] + edges[:-1]) / 2
        nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
        weights = (half[:, None] * w[None, :]).ravel()
        return nodes, weights


def _max_abs(a: NDArray, b: NDArray) -> float:
    return float(np.max(np.abs(a - b)))


def fourier_coeffs(
    f: Sampler,
    ks: Sequence[int],
    config: CircleQuadrature | None = None,
) -> QuadratureResult:
    """(1/2pi) int e^{-ikt} f(e^{it}) dt for each k, by the trapezoid rule.

    Args:
        f (Sampler): Maps an array of unit-circle points to matrices (..., p, p)
        ks (Sequence[int]): Requested indices, negative allowed
        config (CircleQuadrature | None, optional): Quadrature settings.

    Raises:
        NonconvergenceError: After ``max_doublings`` doublings without meeting ``tol``.

    Returns:
        QuadratureResult: value has shape (len(ks), p, p)
    """
    cfg = config or CircleQuadrature()
    idx = np.asarray(ks, dtype=int)
    M = cfg.nodes
    previous: NDArray | None = None
    diff = np.inf
    for _ in range(cfg.max_doublings + 1):
        z = np.exp(1j * CircleQuadrature.angles(M))
        values = np.asarray(f(z), dtype=complex)
        coeffs = fft.fft(values, axis=0) / M
        estimate = coeffs[idx % M]
        if previous is not None:
            diff = _max_abs(estimate, previous)
            if diff < cfg.tol:
                logger.debug("Fourier coefficients converged with M=%d (diff %.2e)", M, diff)
                return QuadratureResult(estimate, diff, True, M)
        previous = estimate
        M *= 2
    raise NonconvergenceError(
        f"Trapezoid Fourier coefficients did not reach {cfg.tol:.1e}", difference=diff
    )


def circle_integral(f: Sampler, config: CircleQuadrature | None = None) -> QuadratureResult:
    """(1/2pi) int f(e^{it}) dt."""
    res = fourier_coeffs(f, [0], config)
    return QuadratureResult(res.value[0], res.error_estimate, res.converged, res.nodes)


def _refine(
    integrate: Callable[[int], NDArray],
    start: int,
    max_doublings: int,
    abs_tol: float,
    rel_tol: float,
    what: str,
) -> QuadratureResult:
    panels = start
    previous = integrate(panels)
    diff = np.inf
    for _ in range(max_doublings):
        panels *= 2
        estimate = integrate(panels)
        diff = _max_abs(estimate, previous)
        tol = max(abs_tol, rel_tol * float(np.max(np.abs(estimate))))
        if diff < tol:
            logger.debug("%s converged with %d panels (diff %.2e)", what, panels, diff)
            return QuadratureResult(estimate, diff, True, panels)
        previous = estimate
    raise NonconvergenceError(f"{what} did not converge", difference=diff)


def line_integral(
    f: Callable[[NDArray[np.float64]], NDArray],
    k: int = 0,
    config: LineQuadrature | None = None,
) -> QuadratureResult:
    """int_R mu^k f(mu) dmu via mu = tan(t).

    The integrand must decay fast enough that mu^k f(mu) (1 + mu^2) stays
    bounded, which holds for k <= 2n against the densities built here.

    Args:
        f (Callable): Maps an array of reals to matrices (..., p, p)
        k (int, optional): Power of mu. Defaults to 0.
        config (LineQuadrature | None, optional): Quadrature settings.

    Returns:
        QuadratureResult: The converged estimate
    """
    cfg = config or LineQuadrature()

    def integrate(panels: int) -> NDArray:
        s, w = cfg.rule(panels)
        t = (np.pi / 2) * s
        mu = np.tan(t)
        values = np.asarray(f(mu))
        scale = (np.pi / 2) * w * (1.0 + mu**2) * mu**k
        return np.tensordot(scale, values, axes=(0, 0))

    return _refine(integrate, cfg.panels, cfg.max_doublings, cfg.abs_tol, cfg.rel_tol, "Line integral")


def _logdet(values: NDArray) -> NDArray[np.float64]:
    sign, logdet = np.linalg.slogdet(values)
    if np.any(~np.isfinite(logdet)) or np.any(np.abs(sign - 1.0) > 1e-8):
        raise IntegrandSingularError("log det of the integrand is not finite and real")
    return np.asarray(logdet, dtype=float)


def poisson_log_integral(
    f: Sampler,
    omega: complex,
    geometry: Geometry,
    circle: CircleQuadrature | None = None,
    line: LineQuadrature | None = None,
) -> QuadratureResult:
    """Poisson average of ln det f over the boundary, seen from omega.

    On the disc the weight is (1 - |omega|^2) / (2 pi |e^{it} - omega|^2). On
    the half-plane it is (b / pi) / |mu - omega|^2 with omega = a + ib; the
    substitution mu = a + b tan(theta) turns this into a uniform average over
    theta, and a quintic grading of theta removes the logarithmic endpoint
    singularity.

    Args:
        f (Sampler): Hermitian positive definite boundary values
        omega (complex): Interior point
        geometry (Geometry): Disc or half-plane
        circle (CircleQuadrature | None, optional): Disc settings.
        line (LineQuadrature | None, optional): Half-plane settings.

    Raises:
        OutOfRegionError: When omega is not interior
        IntegrandSingularError: When ln det f is not finite

    Returns:
        QuadratureResult: The scalar average
    """
    w0 = complex(omega)
    if not bool(geometry.contains(w0)):
        raise OutOfRegionError(f"Poisson point {w0} is not in the open {geometry.value}")
    if geometry is Geometry.DISC:
        weight_scale = 1.0 - abs(w0) ** 2

        def sampler(z: CARRAY) -> NDArray:
            kernel = weight_scale / np.abs(z - w0) ** 2
            return (kernel * _logdet(f(z)))[:, None, None]

        res = circle_integral(sampler, circle)
        return QuadratureResult(
            float(res.value.real[0, 0]), res.error_estimate, res.converged, res.nodes
        )

    cfg = line or LineQuadrature()
    a, b = w0.real, w0.imag

    def integrate(panels: int) -> NDArray:
        s, w = cfg.rule(panels)
        grade = (15 * s - 10 * s**3 + 3 * s**5) / 8
        dgrade = 15 * (1 - s**2) ** 2 / 8
        theta = (np.pi / 2) * grade
        inside = np.abs(s) < 1.0
        mu = a + b * np.tan(theta[inside])
        vals = np.zeros_like(s)
        vals[inside] = _logdet(f(mu))
        return np.asarray(np.sum(w * dgrade * vals) / 2)

    res = _refine(integrate, cfg.panels, cfg.max_doublings, cfg.abs_tol, cfg.rel_tol, "Poisson integral")
    return QuadratureResult(float(res.value), res.error_estimate, res.converged, res.nodes)
