"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``MIDDLEDOM_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from middledom import _pykernels

FOUND = _pykernels.FOUND
INFEASIBLE = _pykernels.INFEASIBLE
OVER_BUDGET = _pykernels.OVER_BUDGET

_compiled = None
if not os.environ.get("MIDDLEDOM_PURE"):
    try:
        from middledom import _kernels as _compiled
    except ImportError:  # pragma: no cover - exercised only without a build
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_WORD = 1 << 64


def smallest_cover(masks, target, base=0, k_min=0, k_max=None, budget=10**8):
    if k_max is None:
        k_max = len(masks)
    if _compiled is not None and target < _WORD:
        return _compiled.smallest_cover(masks, target, base, k_min, k_max, budget)
    return _pykernels.smallest_cover(masks, target, base, k_min, k_max, budget)


def matching_mates(n, adj):
    if _compiled is not None:
        return _compiled.matching_mates(n, adj)
    return _pykernels.matching_mates(n, adj)
