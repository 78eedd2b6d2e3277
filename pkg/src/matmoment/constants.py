# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""The constant values used by matmoment."""

__all__ = (
    "SYMMETRY_TOL",
    "PIVOT_TOL",
    "INVERSE_TOL",
    "TRIM_TOL",
    "SQRT_FLOOR",
    "RANK_TOL",
    "STRUCTURE_TOL",
    "ALGEBRAIC_TOL",
    "INVERSE_IDENTITY_TOL",
    "QUADRATURE_IDENTITY_TOL",
    "IDEMPOTENT_TOL",
    "TRIG_MOMENT_TOL",
    "HAMBURGER_MOMENT_TOL",
    "CONDITION_LIMIT",
    "DEFAULT_DISC_ALPHA",
    "DEFAULT_HALF_PLANE_ALPHA",
    "DEFAULT_DISC_OMEGA",
    "DEFAULT_HALF_PLANE_OMEGA",
    "CIRCLE_NODES",
    "CIRCLE_TOL",
    "CIRCLE_MAX_DOUBLINGS",
    "GAUSS_LEGENDRE_ORDER",
    "LINE_PANELS",
    "LINE_TOL",
    "LINE_MAX_DOUBLINGS",
    "RADIAL_STEP",
    "RESTRICTED_CLASS_HEIGHTS",
    "RESTRICTED_CLASS_DROP",
    "SCHUR_TOL",
    "SCHUR_GRID",
    "CARATHEODORY_TOL",
    "ENTROPY_TOL",
    "ENTROPY_EQUALITY_TOL",
    "DISC_SAMPLE_RADIUS",
    "HALF_PLANE_SAMPLE_BOX",
    "HALF_PLANE_BOUNDARY_SPAN",
    "IDENTITY_SAMPLES",
    "THETA_CHECK_POINTS",
    "THETA_STRICT_MARGIN",
    "TAYLOR_RADIUS",
    "TAYLOR_NODES",
    "DENSITY_GRID",
)

# Gram matrices
SYMMETRY_TOL = 1e-12
PIVOT_TOL = 1e-12
INVERSE_TOL = 1e-10
STRUCTURE_TOL = 1e-10

# Polynomials and square roots
TRIM_TOL = 1e-13
SQRT_FLOOR = 1e-14
RANK_TOL = 1e-8
CONDITION_LIMIT = 1e12

# Identity tolerances, relative Frobenius
ALGEBRAIC_TOL = 1e-10
INVERSE_IDENTITY_TOL = 1e-9
QUADRATURE_IDENTITY_TOL = 1e-8
IDEMPOTENT_TOL = 1e-11

# Moment recovery
TRIG_MOMENT_TOL = 1e-8
HAMBURGER_MOMENT_TOL = 1e-6

# Construction and evaluation points
DEFAULT_DISC_ALPHA = 0.5 + 0j
DEFAULT_HALF_PLANE_ALPHA = 1j
DEFAULT_DISC_OMEGA = 0.3 + 0j
DEFAULT_HALF_PLANE_OMEGA = 1j

# Trapezoid rule on the unit circle
CIRCLE_NODES = 4096
CIRCLE_TOL = 1e-11
CIRCLE_MAX_DOUBLINGS = 4

# Composite Gauss-Legendre on the real line after mu = tan(t)
GAUSS_LEGENDRE_ORDER = 32
LINE_PANELS = 8
LINE_TOL = 1e-9
LINE_MAX_DOUBLINGS = 8

# Solutions
RADIAL_STEP = 1e-6
RESTRICTED_CLASS_HEIGHTS = (1e2, 1e3, 1e4)
RESTRICTED_CLASS_DROP = 1e-2
SCHUR_TOL = 1e-12
SCHUR_GRID = 64
CARATHEODORY_TOL = 1e-10
ENTROPY_TOL = 1e-7
ENTROPY_EQUALITY_TOL = 1e-6
TAYLOR_RADIUS = 0.5
TAYLOR_NODES = 256
DENSITY_GRID = 256

# Sampling regions for identity checks
DISC_SAMPLE_RADIUS = 0.9
HALF_PLANE_SAMPLE_BOX = (-3.0, 3.0, 0.1, 3.0)
HALF_PLANE_BOUNDARY_SPAN = 3.0
IDENTITY_SAMPLES = 20
THETA_CHECK_POINTS = 8
THETA_STRICT_MARGIN = 1e-12
