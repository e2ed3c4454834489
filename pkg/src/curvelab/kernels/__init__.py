"""Hot enumeration kernels with a compiled core and a pure fallback.

The compiled extension is used when present; setting CURVELAB_PURE=1 (or
a build without the extension) selects the numpy implementation.  Both
export the same three functions with identical contracts, and the test
suite checks them against each other.
"""

import os

from curvelab.kernels import _ref

if os.environ.get("CURVELAB_PURE", "") not in ("", "0"):
    _impl = _ref
else:
    try:
        from curvelab.kernels import _core as _impl
    except ImportError:
        _impl = _ref

BACKEND = _impl.BACKEND
pair_match_count = _impl.pair_match_count
axiom_violation_count = _impl.axiom_violation_count
secant_excess_count = _impl.secant_excess_count

__all__ = [
    "BACKEND",
    "pair_match_count",
    "axiom_violation_count",
    "secant_excess_count",
]
