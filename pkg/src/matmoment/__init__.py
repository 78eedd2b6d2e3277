# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Truncated matrix moment problems through de Branges pairs.

matmoment builds, from a finite list of p x p moments, the block Toeplitz or
block Hankel Gram matrix, the de Branges pair (E-, E+), the second-kind
polynomials and the Theta matrix whose linear fractional transformation
describes every solution of the truncated trigonometric or Hamburger problem.
Every matrix identity the construction relies on can be checked numerically.

"""

from ._version import __authors__, __version__

__all__ = ("__authors__", "__version__")
