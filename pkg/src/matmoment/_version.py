# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Declare the matmoment version."""

__authors__ = "matmoment contributors"
__version__ = "0.3.0"
