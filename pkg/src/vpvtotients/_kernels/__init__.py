"""Kernel backend selection.

The compiled Cython module is preferred; the numpy reference implementation
is used when the extension is missing or when the environment variable
VPVTOTIENTS_PURE is set (useful for benchmarking the two against each other).
"""

import os

if os.environ.get("VPVTOTIENTS_PURE"):
    from . import _ref as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _ref as _impl

BACKEND = _impl.BACKEND
selector_tuples = _impl.selector_tuples
selector_count = _impl.selector_count
selector_cos_sum = _impl.selector_cos_sum
selector_char_sum = _impl.selector_char_sum
selector_power_sum = _impl.selector_power_sum
visible_points_box = _impl.visible_points_box

__all__ = [
    "BACKEND",
    "selector_tuples",
    "selector_count",
    "selector_cos_sum",
    "selector_char_sum",
    "selector_power_sum",
    "visible_points_box",
]
