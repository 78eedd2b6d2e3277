# Copyright (C) 2026 by the matmoment contributors

# Licensed under the BSD 3-Clause License.
# See the LICENSE file in the project root for complete license terms and disclaimers.

"""Allow ``python -m matmoment``."""

from matmoment.cli import main

raise SystemExit(main())
